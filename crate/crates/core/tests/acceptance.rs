//! Acceptance criteria 1 to 10. Runs without the libtest harness so that
//! every criterion prints exactly one line; exits non-zero if any fails.

mod oracle;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use gzariski::bitset::BitSet;
use gzariski::checks::{run_checks, select, CheckResult, Env, Sampling, Status};
use gzariski::context::ModuleContext;
use gzariski::corpus::builtin_corpus;
use gzariski::ideal::ideal_label;
use gzariski::limits::Limits;
use gzariski::maps::module_profile;
use gzariski::spectrum::{SpectrumKind, SpectrumSpace, VarietySemantics};
use gzariski::topology::FiniteTopology;

const CRITERION_1_PER_INSTANCE: Duration = Duration::from_secs(1);
const CRITERION_2_TOTAL: Duration = Duration::from_secs(2);
const CRITERION_7_PER_INSTANCE: Duration = Duration::from_secs(2);
const CRITERION_10_PER_RUN: Duration = Duration::from_secs(30);

struct Instance {
    name: String,
    ctx: ModuleContext,
    semantics: VarietySemantics,
    build: Duration,
}

fn corpus() -> Vec<Instance> {
    builtin_corpus()
        .into_iter()
        .map(|d| {
            let t = Instant::now();
            let ctx = d.context(&d.limits(Limits::default())).unwrap();
            Instance {
                name: d.display_name().to_string(),
                ctx,
                semantics: d.semantics(),
                build: t.elapsed(),
            }
        })
        .collect()
}

fn qp_module(i: &Instance) -> SpectrumSpace {
    SpectrumSpace::of_module(&i.ctx.module, &i.ctx.ideals, &i.ctx.submodules, SpectrumKind::QpModule).unwrap()
}

fn run(inst: &Instance, ids: &[&str]) -> (Vec<CheckResult>, Duration) {
    let t = Instant::now();
    let env = Env::new(&inst.ctx, inst.semantics, Sampling::default()).unwrap();
    let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    let results = run_checks(&env, &select(&ids).unwrap());
    (results, t.elapsed() + inst.build)
}

/// First problem found, as text.
type Verdict = Result<String, String>;

fn require(results: &[CheckResult], inst: &str, allow_skip: bool) -> Result<(), String> {
    for r in results {
        let ok = r.outcome.status == Status::Pass || (allow_skip && r.outcome.status == Status::Skipped);
        if !ok {
            return Err(format!(
                "{} {} {} {:?}",
                r.id, inst, r.outcome.status, r.outcome.witness
            ));
        }
    }
    Ok(())
}

fn notes_of<'a>(results: &'a [CheckResult], id: &str) -> &'a [String] {
    &results.iter().find(|r| r.id == id).unwrap().outcome.notes
}

fn c1_closed_set_axioms(c: &[Instance]) -> Verdict {
    let mut worst = Duration::ZERO;
    for i in c {
        let (res, t) = run(i, &["T3.1"]);
        require(&res, &i.name, false)?;
        let top = FiniteTopology::build(&qp_module(i));
        if !top.axiom_report().holds() {
            return Err(format!("{}: closed family fails the axioms", i.name));
        }
        if t > CRITERION_1_PER_INSTANCE {
            return Err(format!("{}: {t:?} > {CRITERION_1_PER_INSTANCE:?}", i.name));
        }
        worst = worst.max(t);
    }
    Ok(format!(
        "{} instances, slowest {worst:.2?} (limit {CRITERION_1_PER_INSTANCE:?})",
        c.len()
    ))
}

fn c2_closure_formula(c: &[Instance]) -> Verdict {
    let t = Instant::now();
    let mut exhaustive = 0;
    for i in c {
        let (res, _) = run(i, &["T4.2.1"]);
        require(&res, &i.name, false)?;
        if qp_module(i).len() <= Sampling::default().exhaustive_up_to {
            exhaustive += 1;
        }
    }
    let t = t.elapsed();
    if t > CRITERION_2_TOTAL {
        return Err(format!("{t:?} > {CRITERION_2_TOTAL:?}"));
    }
    Ok(format!(
        "{exhaustive}/{} instances over all subsets, {t:.2?} (limit {CRITERION_2_TOTAL:?})",
        c.len()
    ))
}

fn c3_t0_equivalence(c: &[Instance]) -> Verdict {
    let all = |v: &str| format!("t0={v};variety-separates={v};fibers-le-1={v};phi-injective={v}");
    for i in c {
        let (res, _) = run(i, &["T4.3"]);
        require(&res, &i.name, false)?;
        let expected = match i.name.as_str() {
            "INST-A" | "INST-C" => Some(all("false")),
            "INST-D" => Some(all("true")),
            _ => None,
        };
        if let Some(e) = expected {
            let got = notes_of(&res, "T4.3").join(";");
            if got != e {
                return Err(format!("{}: {got}", i.name));
            }
        }
    }
    Ok("four conditions agree everywhere; INST-A, INST-C all false; INST-D all true".into())
}

fn c4_irreducibility_bridge(c: &[Instance]) -> Verdict {
    let mut subsets = 0usize;
    for i in c {
        let (res, _) = run(i, &["L4.8"]);
        require(&res, &i.name, false)?;
        let n = i.ctx.ideals.class.iter().filter(|k| k.graded_prime).count();
        if n > 12 {
            return Err(format!("{}: |Spec(R)| = {n} exceeds 12", i.name));
        }
        subsets += 1 << n;
    }
    Ok(format!("{subsets} subsets of Spec(R) over {} rings", c.len()))
}

fn c5_components(c: &[Instance]) -> Verdict {
    let mut used = 0;
    for i in c {
        if !module_profile(&i.ctx).quasi_primaryful {
            continue;
        }
        used += 1;
        let (res, _) = run(i, &["C4.10", "T4.11"]);
        require(&res, &i.name, false)?;
    }
    let d = c.iter().find(|i| i.name == "INST-D").unwrap();
    let env = Env::new(&d.ctx, d.semantics, Sampling::default()).unwrap();
    let top = &env.maps.qp_module_top;
    let space = &env.maps.qp_module;
    let mut radicals: Vec<String> = top
        .irreducible_components()
        .iter()
        .map(|comp| {
            let g = top.generic_point(comp).point.unwrap();
            let rad = d.ctx.project_ideal(space.radicals[g]);
            ideal_label(&d.ctx.bar, &d.ctx.bar_ideals.ideals[rad])
        })
        .collect();
    radicals.sort();
    if radicals != ["(2)", "(3)"] {
        return Err(format!("INST-D components map to {radicals:?}"));
    }
    Ok(format!(
        "{used} quasi-primaryful instances; INST-D components -> {{(2),(3)}}"
    ))
}

fn c6_map_calculus(c: &[Instance]) -> Verdict {
    let ids = ["T3.11", "T3.12", "C3.13", "P3.16.1", "P3.16.2", "P3.16.3", "T3.16"];
    for i in c {
        let (res, _) = run(i, &ids);
        require(&res, &i.name, true)?;
    }
    let d = c.iter().find(|i| i.name == "INST-D").unwrap();
    let env = Env::new(&d.ctx, d.semantics, Sampling::default()).unwrap();
    if !env.maps.phi_profile().homeomorphism {
        return Err("INST-D: phi is not a homeomorphism".into());
    }
    if env.maps.phi.assignment != env.maps.phi_composed.assignment {
        return Err("INST-D: direct and composed phi differ".into());
    }
    Ok("identities hold on every instance; INST-D phi homeomorphic, routes agree".into())
}

fn c7_base_and_compactness(c: &[Instance]) -> Verdict {
    let mut worst = Duration::ZERO;
    for i in c {
        let (res, t) = run(i, &["T3.14", "T3.16", "T3.17"]);
        require(&res, &i.name, true)?;
        if t > CRITERION_7_PER_INSTANCE {
            return Err(format!("{}: {t:?} > {CRITERION_7_PER_INSTANCE:?}", i.name));
        }
        worst = worst.max(t);
    }
    Ok(format!("slowest {worst:.2?} (limit {CRITERION_7_PER_INSTANCE:?})"))
}

fn c8_spectral(c: &[Instance]) -> Verdict {
    for i in c {
        let (res, _) = run(i, &["T4.15"]);
        require(&res, &i.name, false)?;
        let env = Env::new(&i.ctx, i.semantics, Sampling::default()).unwrap();
        let h = env.maps.qp_module_top.hochster();
        // Sober here means unique generic points, hence the T0 flag.
        let hochster = h.quasi_compact && h.qc_opens_intersection_closed && h.qc_opens_base && h.sober && h.t0;
        let column =
            env.maps.qp_module_top.is_t0() && env.maps.phi.is_injective() && env.maps.phi_profile().homeomorphism;
        if hochster != column {
            return Err(format!("{}: hochster={hochster} column={column}", i.name));
        }
    }
    Ok("Hochster's conditions match T0/injective/homeomorphism on every instance".into())
}

fn to_set(b: &BitSet) -> oracle::Set {
    b.iter().collect()
}

fn c9_oracle(c: &[Instance]) -> Verdict {
    let mut checked = 0;
    for i in c
        .iter()
        .filter(|i| i.ctx.ring.size() <= 64 && i.ctx.module.size() <= 64)
    {
        let mut ideals: Vec<_> = i.ctx.ideals.ideals.iter().map(|x| to_set(x.elements())).collect();
        let mut subs: Vec<_> = i
            .ctx
            .submodules
            .submodules
            .iter()
            .map(|x| to_set(x.elements()))
            .collect();
        ideals.sort();
        subs.sort();
        let mut oi = oracle::graded_ideals(&i.ctx.ring);
        let mut os = oracle::graded_submodules(&i.ctx.module);
        oi.sort();
        os.sort();
        if ideals != oi {
            return Err(format!("{}: ideals differ", i.name));
        }
        if subs != os {
            return Err(format!("{}: submodules differ", i.name));
        }
        checked += 1;
    }
    Ok(format!("{checked} instances with carrier <= 64"))
}

fn c10_determinism() -> Verdict {
    let args = ["verify", "--corpus", "--format", "machine", "--jobs", "8"];
    let mut outs = Vec::new();
    for _ in 0..2 {
        let t = Instant::now();
        let o = Command::new(env!("CARGO_BIN_EXE_gzariski"))
            .args(args)
            .output()
            .unwrap();
        let t = t.elapsed();
        if t > CRITERION_10_PER_RUN {
            return Err(format!("run took {t:?} > {CRITERION_10_PER_RUN:?}"));
        }
        if !matches!(o.status.code(), Some(0 | 1)) {
            return Err(format!("exit {:?}", o.status.code()));
        }
        outs.push((o.stdout, t));
    }
    if outs[0].0 != outs[1].0 {
        return Err("outputs differ".into());
    }
    Ok(format!(
        "{} bytes identical; runs {:.2?} and {:.2?} (limit {CRITERION_10_PER_RUN:?})",
        outs[0].0.len(),
        outs[0].1,
        outs[1].1
    ))
}

fn main() -> ExitCode {
    let c = corpus();
    let criteria: Vec<(&str, Verdict)> = vec![
        ("closed-set axioms", c1_closed_set_axioms(&c)),
        ("closure formula", c2_closure_formula(&c)),
        ("T0 equivalence", c3_t0_equivalence(&c)),
        ("irreducibility bridge", c4_irreducibility_bridge(&c)),
        ("components and minimal primes", c5_components(&c)),
        ("map calculus", c6_map_calculus(&c)),
        ("base and compactness", c7_base_and_compactness(&c)),
        ("spectral characterisation", c8_spectral(&c)),
        ("oracle equivalence", c9_oracle(&c)),
        ("determinism", c10_determinism()),
    ];
    let mut failed = 0;
    for (n, (title, verdict)) in criteria.iter().enumerate() {
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS {title}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {title}: {why}", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
