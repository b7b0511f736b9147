//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eccentric::bounds::{audit_balls, exact_bound, sharpness_lower_exact, BoundName};
use eccentric::distance::{avec, diameter, weighted_avec};
use eccentric::field::make_field;
use eccentric::random::{random_connected_graph, random_tree};
use eccentric::replay::names;
use eccentric::replay::{build_matching, ProofTrace};
use eccentric::{
    chain, edge_distance, forbidden_cycle_scan, girth, path_avec, reiman, replay, ChainSpec,
    Girth, Graph, Rational, Variant,
};

type Outcome = Result<String, String>;
// (exit status, stdout, file contents)
type Criterion = fn() -> Outcome;
type RunRecord = (i32, Vec<u8>, Vec<u8>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if $cond {
        } else {
            return Err(format!($($msg)+));
        }
    };
}

const REIMAN_Q: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];
const CHAIN_DELTA: [usize; 3] = [3, 4, 5];
const CHAIN_ELL: [usize; 5] = [2, 4, 6, 8, 10];

fn chains() -> Vec<(usize, usize, Graph)> {
    CHAIN_DELTA
        .iter()
        .flat_map(|&d| CHAIN_ELL.iter().map(move |&l| (d, l)))
        .map(|(d, l)| (d, l, chain(&ChainSpec::new(d, l)).unwrap().graph))
        .collect()
}

fn reimans() -> Vec<(u64, Graph)> {
    REIMAN_Q.iter().map(|&q| (q, reiman(q).unwrap().graph)).collect()
}

fn c1_reiman() -> Outcome {
    let start = Instant::now();
    for (q, g) in reimans() {
        let n = 2 * (q * q + q + 1) as usize;
        ensure!(g.n() == n, "q = {q}: order {} != {n}", g.n());
        ensure!(
            (0..g.n()).all(|v| g.degree(v) == q as usize + 1),
            "q = {q}: not {}-regular",
            q + 1
        );
        ensure!(g.is_bipartite(), "q = {q}: not bipartite");
        ensure!(!forbidden_cycle_scan(&g).has_c4, "q = {q}: contains C4");
        ensure!(girth(&g) == Girth::Finite(6), "q = {q}: girth {}", girth(&g));
        ensure!(diameter(&g).unwrap() == 3, "q = {q}: diameter != 3");
    }
    let secs = start.elapsed().as_secs_f64();
    ensure!(secs < 10.0, "took {secs:.1}s");
    Ok(format!("q in {REIMAN_Q:?}, {secs:.2}s"))
}

fn c2_chain_sandwich() -> Outcome {
    let start = Instant::now();
    let mut largest = 0;
    for (d, l, g) in chains() {
        let ds = 2 * d * d - 2 * d + 2;
        ensure!(g.n() == l * ds, "({d},{l}): n = {}", g.n());
        ensure!(g.min_degree() == d, "({d},{l}): min degree {}", g.min_degree());
        ensure!(girth(&g).at_least(6), "({d},{l}): girth {}", girth(&g));
        let diam = diameter(&g).unwrap() as usize;
        ensure!(diam == 6 * l - 5, "({d},{l}): diameter {diam} != {}", 6 * l - 5);
        let a = avec(&g).unwrap();
        let lower = sharpness_lower_exact(g.n(), d);
        let upper = exact_bound(BoundName::Girth6T31, g.n(), d).unwrap().unwrap();
        ensure!(lower <= a && a <= upper, "({d},{l}): {lower} <= {a} <= {upper} fails");
        largest = largest.max(g.n());
    }
    let secs = start.elapsed().as_secs_f64();
    ensure!(secs < 60.0, "took {secs:.1}s");
    Ok(format!("15 instances, largest n = {largest}, {secs:.2}s"))
}

fn c3_middle_diameter() -> Outcome {
    for q in [2u64, 3, 4] {
        let g = reiman(q).unwrap().graph;
        let h = g.with_edges(&[], &[g.edges()[0]]).unwrap();
        let d = diameter(&h).unwrap();
        ensure!(d == 5, "q = {q}: diameter {d}");
    }
    Ok("q in [2, 3, 4]".into())
}

fn girth6_traces() -> Vec<(String, Graph, ProofTrace)> {
    let mut out = Vec::new();
    for (q, g) in reimans() {
        let t = replay(&g, Variant::Girth6, None).unwrap();
        out.push((format!("reiman({q})"), g, t));
    }
    for (d, l, g) in chains() {
        let t = replay(&g, Variant::Girth6, None).unwrap();
        out.push((format!("chain({d},{l})"), g, t));
    }
    out
}

fn maxdeg_traces() -> Vec<(String, ProofTrace)> {
    [2usize, 4, 6]
        .iter()
        .map(|&l| {
            let spec = ChainSpec::new(3, l).with_head(reiman(4).unwrap());
            let g = chain(&spec).unwrap().graph;
            let anchor = (0..g.n()).find(|&v| g.degree(v) == g.max_degree());
            (format!("head chain(3,{l})"), replay(&g, Variant::Maxdeg, anchor).unwrap())
        })
        .collect()
}

fn c4_replay_girth6() -> Outcome {
    let required = [
        names::AVEC_G_LE_T,
        names::DISPLACEMENT_C,
        names::CBAR_GE_DELTA_STAR,
        names::AVEC_C_T_LE_L,
        names::TARGET_CONNECTED,
        names::AVEC_L_LE_TARGET,
        names::AVEC_CPRIME_PATH,
        names::FINAL,
    ];
    let mut count = 0;
    for (label, g, t) in girth6_traces() {
        for name in required {
            let c = t.check(name).ok_or_else(|| format!("{label}: missing {name}"))?;
            ensure!(c.pass, "{label}: {name} failed ({:?} vs {:?})", c.lhs, c.rhs);
        }
        ensure!(t.pass, "{label}: overall fail");
        // independent check of the matching invariants with pairwise edge distances
        let m = build_matching(&g, Variant::Girth6, None).unwrap();
        for i in 0..m.len() {
            for j in 0..i {
                let d = edge_distance(&g, m.edges[i], m.edges[j]).unwrap().unwrap();
                ensure!(d >= 5, "{label}: d(e_{}, e_{}) = {d}", i + 1, j + 1);
            }
        }
        let mut owner = vec![None; g.n()];
        for (i, &(a, b)) in m.edges.iter().enumerate() {
            for x in eccentric::ball(&g, &[a, b], 2).unwrap() {
                ensure!(owner[x].is_none(), "{label}: balls overlap at {x}");
                owner[x] = Some(i);
            }
        }
        for &f in g.edges() {
            let near = m
                .edges
                .iter()
                .map(|&e| edge_distance(&g, e, f).unwrap().unwrap())
                .min()
                .unwrap();
            ensure!(near <= 4, "{label}: edge {f:?} at distance {near}");
        }
        count += 1;
    }
    Ok(format!("{count} graphs, all checks pass"))
}

fn c5_replay_maxdeg() -> Outcome {
    let mut details = Vec::new();
    for (label, t) in maxdeg_traces() {
        let e1 = t.check(names::CBAR_E1_GE_MAX_STAR).ok_or("missing cbar(e_1) check")?;
        ensure!(e1.pass, "{label}: cbar(e_1) {:?} < {:?}", e1.rhs, e1.lhs);
        ensure!(t.check(names::FINAL).unwrap().pass, "{label}: final bound fails");
        let failed: Vec<&str> = t.failed().map(|c| c.name.as_str()).collect();
        ensure!(failed.is_empty(), "{label}: failed {failed:?}");
        details.push(format!("n={} k={}", t.graph.n, t.matching_size));
    }
    Ok(details.join(", "))
}

fn c6_ball_audit() -> Outcome {
    let heawood = reiman(2).unwrap().graph;
    let a = audit_balls(&heawood).unwrap();
    ensure!(a.edges.iter().all(|e| e.margin == 0), "reiman(2) is not tight on every edge");
    let mut min = i64::MAX;
    let graphs = reimans().into_iter().map(|(_, g)| g).chain(chains().into_iter().map(|(_, _, g)| g));
    for g in graphs {
        let a = audit_balls(&g).unwrap();
        ensure!(a.min_edge_margin >= 0, "n = {}: edge margin {}", g.n(), a.min_edge_margin);
        min = min.min(a.min_edge_margin);
    }
    Ok(format!("min edge margin {min}, reiman(2) tight"))
}

fn c7_path() -> Outcome {
    for n in 1..=500usize {
        let g = Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap();
        let ni = n as i64;
        let expect = Rational::new((3 * ni * ni - 2 * ni).div_euclid(4), ni);
        ensure!(avec(&g).unwrap() == expect, "n = {n}");
        ensure!(path_avec(n) == expect, "path_avec({n})");
    }
    Ok("n in 1..=500".into())
}

fn c8_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..1000 {
        let n = rng.gen_range(1..=60);
        let p = rng.gen_range(0.0..0.25);
        let g = random_connected_graph(&mut rng, n, p);
        ensure!(avec(&g).unwrap() <= path_avec(n), "(a) case {i}");
    }
    for i in 0..1000 {
        let n = rng.gen_range(1..=50);
        let t = random_tree(&mut rng, n);
        let budget = 200 - n as i64;
        let mut extra = budget;
        let w: Vec<Rational> = (0..n)
            .map(|_| {
                let e = rng.gen_range(0..=extra.min(6));
                extra -= e;
                Rational::from_integer(1 + e)
            })
            .collect();
        let total: Rational = w.iter().sum();
        ensure!(*total.numer() <= 200, "(b) weight budget");
        let bound = path_avec(total.to_integer() as usize);
        ensure!(weighted_avec(&t, &w).unwrap() <= bound, "(b) case {i}");
    }
    let mut fields = 0;
    for q in 2..=27u64 {
        let Ok(f) = make_field(q) else { continue };
        let els: Vec<_> = f.elements().collect();
        for a in &els {
            ensure!(f.pow(a, q) == *a, "(c) GF({q}) Frobenius");
            if !a.is_zero() {
                ensure!(f.mul(a, &f.inv(a).unwrap()) == f.one(), "(c) GF({q}) inverse");
            }
            for b in &els {
                ensure!(f.add(a, b) == f.add(b, a), "(c) GF({q}) add comm");
                ensure!(f.mul(a, b) == f.mul(b, a), "(c) GF({q}) mul comm");
                for c in &els {
                    ensure!(
                        f.mul(a, &f.add(b, c)) == f.add(&f.mul(a, b), &f.mul(a, c)),
                        "(c) GF({q}) distributivity"
                    );
                    ensure!(
                        f.mul(&f.mul(a, b), c) == f.mul(a, &f.mul(b, c)),
                        "(c) GF({q}) mul assoc"
                    );
                    ensure!(
                        f.add(&f.add(a, b), c) == f.add(a, &f.add(b, c)),
                        "(c) GF({q}) add assoc"
                    );
                }
            }
        }
        fields += 1;
    }
    let mut runs = 0;
    let traces = girth6_traces()
        .into_iter()
        .map(|(l, _, t)| (l, t))
        .chain(maxdeg_traces());
    for (label, t) in traces {
        for name in [names::LINE_DISPLACEMENT, names::POWER_CONTRACTION] {
            ensure!(t.check(name).is_some_and(|c| c.pass), "(d) {label}: {name}");
        }
        runs += 1;
    }
    Ok(format!("1000 graphs, 1000 weighted trees, {fields} fields, {runs} replay runs"))
}

fn bin(args: &[&str], dir: &Path) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_eccentric"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("run binary");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn c9_determinism() -> Outcome {
    let runs: Vec<Vec<RunRecord>> = (0..2)
        .map(|_| {
            let dir = tempfile::tempdir().unwrap();
            let p = dir.path();
            let steps: [&[&str]; 6] = [
                &["gen", "reiman", "--q", "3", "--out", "h3.el"],
                &["gen", "chain", "--delta", "3", "--ell", "4", "--out", "c.el"],
                &["analyze", "c.el", "--json"],
                &["replay", "c.el", "--variant", "girth6", "--trace", "t.json"],
                &["replay", "c.el", "--variant", "maxdeg"],
                &["sweep", "--family", "chain", "--delta", "3,4", "--ell-range", "2..6", "--csv", "s.csv"],
            ];
            let files = ["h3.el", "c.el", "c.el.meta.json", "t.json", "s.csv"];
            let mut rec: Vec<RunRecord> = steps
                .iter()
                .map(|a| {
                    let (code, stdout) = bin(a, p);
                    (code, stdout, Vec::new())
                })
                .collect();
            for f in files {
                rec.push((0, Vec::new(), std::fs::read(p.join(f)).unwrap()));
            }
            rec
        })
        .collect();
    ensure!(runs[0].iter().take(6).all(|r| r.0 == 0), "non-zero exit status");
    ensure!(runs[0] == runs[1], "outputs differ between runs");
    Ok("gen/analyze/replay/sweep outputs byte-identical".into())
}

fn main() {
    let criteria: [(&str, Criterion); 9] = [
        ("1 reiman generator", c1_reiman),
        ("2 chain sandwich", c2_chain_sandwich),
        ("3 middle-copy diameter", c3_middle_diameter),
        ("4 replay girth6", c4_replay_girth6),
        ("5 replay maxdeg", c5_replay_maxdeg),
        ("6 ball audit", c6_ball_audit),
        ("7 path exactness", c7_path),
        ("8 property suites", c8_properties),
        ("9 determinism", c9_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, f) in criteria {
        let result = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panic: {msg}"))
            });
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
