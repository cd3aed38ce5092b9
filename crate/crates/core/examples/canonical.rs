//! Print the canonical form of an instance file.
use gzariski::instance::{read_instance, serialize_instance};

fn main() {
    let path = std::env::args().nth(1).expect("usage: canonical <file>");
    match read_instance(path.as_ref()) {
        Ok(d) => print!("{}", serialize_instance(&d)),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    }
}
