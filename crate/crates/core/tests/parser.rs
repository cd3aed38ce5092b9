use gzariski::corpus::SOURCES;
use gzariski::error::{AlgebraError, ParseError};
use gzariski::instance::{parse_instance, serialize_instance};
use gzariski::limits::Limits;

#[test]
fn corpus_round_trips_through_canonical_form() {
    for (file, src) in SOURCES {
        let d = parse_instance(src).unwrap_or_else(|e| panic!("{file}: {e}"));
        let canon = serialize_instance(&d);
        let again = parse_instance(&canon).unwrap();
        assert_eq!(d, again, "{file}");
        assert_eq!(serialize_instance(&again), canon, "{file}");
        // Only comments and the implicit trivial group may differ.
        let body: Vec<&str> = src.lines().filter(|l| !l.starts_with('#')).collect();
        for line in body {
            assert!(canon.lines().any(|c| c == line), "{file}: lost `{line}`");
        }
    }
}

#[test]
fn canonical_text_of_a_module_with_two_generators() {
    let src = SOURCES.iter().find(|(f, _)| *f == "z4-sum.inst").unwrap().1;
    let expected = "\
name = Z4-Z2xZ4
[group]
order = 1
identity = 0
table = 0
[ring]
component 0 = 4
mul 0 0 (1) (1) = (1)
one = 0:(1)
[module]
component 0 = 2 x 4
act 0 0 (1) (1,0) = (1,0)
act 0 0 (1) (0,1) = (0,1)
";
    assert_eq!(serialize_instance(&parse_instance(src).unwrap()), expected);
}

#[test]
fn first_instance_has_two_z2_components() {
    let src = SOURCES.iter().find(|(f, _)| *f == "inst-a.inst").unwrap().1;
    let d = parse_instance(src).unwrap();
    assert_eq!(d.group.order(), 2);
    let ring = d.build_ring(&Limits::default()).unwrap();
    assert_eq!(ring.size(), 4);
}

#[test]
fn diagnostics_carry_positions() {
    assert!(matches!(
        parse_instance(""),
        Err(ParseError::Syntax { line: 1, col: 1, .. })
    ));
    let e = parse_instance("[ring]\ncomponent 0 = 2\nmul 0 0 (1)(1) = (3)\n").unwrap_err();
    assert!(matches!(e, ParseError::Semantic { line: 3, .. }), "{e:?}");
    assert!(e.to_string().contains("out of range"), "{e}");
    let e = parse_instance("[ring]\ncomponent 0 = 2\n[ring]\n").unwrap_err();
    assert!(matches!(e, ParseError::DuplicateSection { line: 3, .. }), "{e:?}");
    let e = parse_instance("[ring]\ncomponent 0 = 2\nmul 0 1 (1) (1) = (1)\n").unwrap_err();
    assert!(matches!(e, ParseError::Semantic { line: 3, .. }), "{e:?}");
}

#[test]
fn algebra_axioms_are_enforced() {
    let build = |text: &str| parse_instance(text).unwrap().context(&Limits::default());
    let bad_unity = "[ring]\ncomponent 0 = 4\nmul 0 0 (1) (1) = (2)\none = 0:(1)\n[module]\nregular\n";
    assert!(matches!(build(bad_unity), Err(AlgebraError::BadUnity(..))));

    let leaves_component = "[group]\norder = 2\nidentity = 0\ntable = 0 1 / 1 0\n[ring]\n\
        component 0 = 2\ncomponent 1 = 2\nmul 0 0 (1) (1) = (1)\nmul 0 1 (1) (1) = 0:(1)\n\
        mul 1 1 (1) (1) = (0)\none = 0:(1)\n[module]\nregular\n";
    assert!(matches!(
        build(leaves_component),
        Err(AlgebraError::GradingViolation { .. })
    ));

    // Z/2 does not act on Z/3.
    let not_a_module = "[ring]\ncomponent 0 = 2\nmul 0 0 (1) (1) = (1)\none = 0:(1)\n\
        [module]\ncomponent 0 = 3\nact 0 0 (1) (1) = (1)\n";
    assert!(build(not_a_module).is_err());

    let no_module = "[ring]\ncomponent 0 = 2\nmul 0 0 (1) (1) = (1)\none = 0:(1)\n";
    assert!(matches!(build(no_module), Err(AlgebraError::MissingModule)));
}

#[test]
fn caps_are_enforced() {
    let text = "[ring]\ncomponent 0 = 12\nmul 0 0 (1) (1) = (1)\none = 0:(1)\n[module]\nregular\n\
        [options]\nmax_lattice = 3\n";
    let d = parse_instance(text).unwrap();
    let err = d.context(&d.limits(Limits::default())).unwrap_err();
    assert!(matches!(err, AlgebraError::BudgetExceeded { .. }), "{err:?}");
}
