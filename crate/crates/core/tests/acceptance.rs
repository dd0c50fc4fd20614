//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use andor_chain::count::{count_closed, count_infinite, count_open, reduce_closed, reduce_open, CountEngine};
use andor_chain::enumerate::{enumerate_fixed_points, EnumerateOptions};
use andor_chain::model::{open_from_operators, ClosedChain, FiniteNetwork, OpenChain, Operator};
use andor_chain::oracle::{brute_force_count, brute_force_fixed_points, OracleOptions};
use andor_chain::sequences::{fibonacci, open_bounds, padovan};
use andor_chain::sweep::{sweep_closed_n, sweep_open_n};
use andor_chain::{Count, Exec, InfiniteChain, RunTuple, StateVector};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const TABLE_1: [&str; 13] = [
    "000000000000",
    "000000000011",
    "000001110000",
    "000001111111",
    "000001110011",
    "000111110000",
    "000111110011",
    "000111111111",
    "111100000000",
    "111100000011",
    "111111110000",
    "111111110011",
    "111111111111",
];

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn tuple(v: &[u64]) -> RunTuple {
    RunTuple::runs(v).unwrap()
}

fn ops_for(len: usize, index: u64) -> Vec<Operator> {
    (0..len)
        .map(|i| if (index >> i) & 1 == 1 { Operator::Or } else { Operator::And })
        .collect()
}

fn ops_from(text: &str) -> Vec<Operator> {
    text.chars()
        .map(|c| if c == '&' { Operator::And } else { Operator::Or })
        .collect()
}

fn example_1() -> Outcome {
    let chain = OpenChain::new(vec![2, 1, 1, 3, 2, 1], Operator::And).unwrap();
    let opts = EnumerateOptions {
        exec: Exec::Sequential,
        ..Default::default()
    };
    let start = Instant::now();
    let count = count_open(&tuple(chain.runs())).unwrap();
    let fps = enumerate_fixed_points(&chain, opts).unwrap();
    let elapsed = start.elapsed();
    ensure!(count == big(13), "count {count} != 13");
    let got: BTreeSet<String> = fps.iter().map(StateVector::to_string).collect();
    let want: BTreeSet<String> = TABLE_1.iter().map(|s| s.to_string()).collect();
    ensure!(got == want, "fixed points differ from the expected list: {got:?}");
    ensure!(elapsed < Duration::from_millis(1), "took {elapsed:?} (limit 1 ms)");
    Ok(format!("13 fixed points, matching the expected list, {elapsed:?}"))
}

fn example_2() -> Outcome {
    let start = Instant::now();
    let a = count_closed(&[3, 1, 1, 3, 2, 2]).unwrap();
    let b = count_closed(&[1, 3, 2, 2, 3, 1]).unwrap();
    let ring = ClosedChain::from_operators(&ops_from("&&&|&|||&&||")).unwrap();
    let oracle = brute_force_count(&ring, OracleOptions::default()).unwrap();
    let elapsed = start.elapsed();
    ensure!(a == big(11), "[3,1,1,3,2,2] -> {a}");
    ensure!(b == big(11), "[1,3,2,2,3,1] -> {b}");
    ensure!(oracle == big(11), "oracle -> {oracle}");
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?} (limit 1 s)");
    Ok(format!("both representations 11, oracle 11, {elapsed:?}"))
}

fn base_cases() -> Outcome {
    ensure!(count_open(&RunTuple::empty()).unwrap() == big(2), "F() != 2");
    for k in 1..=9 {
        ensure!(count_open(&tuple(&[k])).unwrap() == big(2), "F({k}) != 2");
    }
    for k1 in 1..=5 {
        for k2 in 1..=5 {
            ensure!(count_open(&tuple(&[k1, k2])).unwrap() == big(3), "F({k1},{k2}) != 3");
        }
    }
    ensure!(count_open(&tuple(&[1, 1, 1])).unwrap() == big(4), "F(1,1,1) != 4");
    ensure!(count_open(&tuple(&[1, 2, 1])).unwrap() == big(5), "F(1,2,1) != 5");
    for k in 3..=9 {
        ensure!(count_closed(&[k]).unwrap() == big(2), "F[{k}] != 2");
    }
    for k in 2..=9 {
        ensure!(count_closed(&[k, 1]).unwrap() == big(2), "F[{k},1] != 2");
    }
    for k1 in 2..=5 {
        for k2 in 2..=5 {
            ensure!(count_closed(&[k1, k2]).unwrap() == big(3), "F[{k1},{k2}] != 3");
        }
    }
    Ok("all base values as stated".into())
}

fn open_sweep() -> Outcome {
    let mut total = 0;
    for n in 2..=14 {
        match sweep_open_n(n, Exec::default()) {
            Ok(k) => total += k,
            Err(m) => return Err(format!("mismatch {m:?}")),
        }
    }
    Ok(format!("{total} open networks, n = 2..14, zero mismatches"))
}

fn closed_sweep() -> Outcome {
    let mut total = 0;
    for n in 3..=12 {
        match sweep_closed_n(n, Exec::default()) {
            Ok(k) => total += k,
            Err(m) => return Err(format!("mismatch {m:?}")),
        }
    }
    Ok(format!("{total} closed networks, n = 3..12, zero mismatches"))
}

fn sequence_identities() -> Outcome {
    let mut engine = CountEngine::new();
    for m in 0..=200usize {
        let a = engine.count_open(&tuple(&vec![1; m + 2])).unwrap();
        ensure!(a == padovan(m + 5), "F(A_{m}) != a_{}", m + 5);
        let mut b_runs = vec![2; m + 2];
        b_runs[0] = 1;
        b_runs[m + 1] = 1;
        let b = engine.count_open(&tuple(&b_runs)).unwrap();
        ensure!(b == fibonacci(m + 3), "F(B_{m}) != b_{}", m + 3);
        ensure!(
            engine.count_open(&tuple(&vec![2; m + 2])).unwrap() == b,
            "unreduced B_{m} differs"
        );
    }
    let mut closed = 0;
    for m in (2..=200usize).step_by(2) {
        let a = engine.count_closed(&vec![1; m + 2]).unwrap();
        let want_a = big(3) * padovan(m) - padovan(m - 2);
        ensure!(a == want_a, "F[A_{m}] = {a} != {want_a}");
        let b = engine.count_closed(&vec![2; m + 2]).unwrap();
        let want_b = fibonacci(m + 2) + fibonacci(m);
        ensure!(b == want_b, "F[B_{m}] = {b} != {want_b}");
        closed += 1;
    }
    Ok(format!("open m = 0..200, closed even m = 2..200 ({closed} values)"))
}

fn bounds_property() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xA0D0_2016);
    let mut engine = CountEngine::new();
    let mut attained_lower = BTreeSet::new();
    let mut attained_upper = BTreeSet::new();
    let samples = 1200;
    for _ in 0..samples {
        let m = rng.gen_range(0..=50usize);
        let mut runs = vec![1u64];
        runs.extend((0..m).map(|_| rng.gen_range(1..=9u64)));
        runs.push(1);
        let bounds = open_bounds(m);
        let v = engine.count_open(&tuple(&runs)).unwrap();
        ensure!(
            bounds.lower <= v && v <= bounds.upper,
            "{runs:?}: {v} outside [{}, {}]",
            bounds.lower,
            bounds.upper
        );
    }
    for m in 0..=50usize {
        let bounds = open_bounds(m);
        let lower = engine.count_open(&tuple(&vec![1; m + 2])).unwrap();
        let mut b = vec![2u64; m + 2];
        b[0] = 1;
        b[m + 1] = 1;
        let upper = engine.count_open(&tuple(&b)).unwrap();
        if lower == bounds.lower {
            attained_lower.insert(m);
        }
        if upper == bounds.upper {
            attained_upper.insert(m);
        }
    }
    ensure!(attained_lower.len() == 51, "lower bound not attained for some m");
    ensure!(attained_upper.len() == 51, "upper bound not attained for some m");
    Ok(format!("{samples} random tuples inside bounds; A_m and B_m attain them for m = 0..50"))
}

fn structural_properties() -> Outcome {
    let mut engine = CountEngine::new();
    let mut mirror = CountEngine::new();

    // left/right recursion agreement and reversal symmetry: every tuple, m <= 12, entries in {1,2,3}
    let mut checked = 0u64;
    for m in 0..=12u32 {
        for code in 0..3u64.pow(m) {
            let mut c = code;
            let runs: Vec<u64> = (0..m)
                .map(|_| {
                    let k = c % 3 + 1;
                    c /= 3;
                    k
                })
                .collect();
            let t = tuple(&runs);
            let left = engine.count_open(&t).unwrap();
            let right = mirror.count_open_mirrored(&t).unwrap();
            ensure!(left == right, "left/right differ on {runs:?}: {left} vs {right}");
            let mut rev = runs.clone();
            rev.reverse();
            ensure!(engine.count_open(&tuple(&rev)).unwrap() == left, "reversal differs on {runs:?}");
            checked += 1;
        }
    }

    // closed rotation and reflection invariance: every even-length tuple up to 10 runs, entries in {1,2,3}
    let mut rings = 0u64;
    for r in (2..=10u32).step_by(2) {
        for code in 0..3u64.pow(r) {
            let mut c = code;
            let runs: Vec<u64> = (0..r)
                .map(|_| {
                    let k = c % 3 + 1;
                    c /= 3;
                    k
                })
                .collect();
            if runs.iter().sum::<u64>() < 3 {
                continue;
            }
            let base = engine.count_closed(&runs).unwrap();
            let mut reflected = runs.clone();
            reflected.reverse();
            ensure!(engine.count_closed(&reflected).unwrap() == base, "reflection differs on {runs:?}");
            for shift in 1..runs.len() {
                let mut rotated = runs.clone();
                rotated.rotate_left(shift);
                ensure!(engine.count_closed(&rotated).unwrap() == base, "rotation differs on {runs:?}");
                ensure!(
                    engine.count_closed_unrotated(&rotated).unwrap() == base,
                    "unrotated formula differs on {rotated:?}"
                );
            }
            rings += 1;
        }
    }

    // reduction preserves counts on random tuples with entries up to 9
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..2000 {
        let m = rng.gen_range(0..=40usize);
        let runs: Vec<u64> = (0..m).map(|_| rng.gen_range(1..=9)).collect();
        let reduced = reduce_open(&runs);
        ensure!(
            engine.count_open(&tuple(&runs)).unwrap() == engine.count_open(&tuple(&reduced)).unwrap(),
            "open reduction changed count of {runs:?}"
        );
        let r = 2 * rng.gen_range(1..=10usize);
        let closed: Vec<u64> = (0..r).map(|_| rng.gen_range(1..=9)).collect();
        if closed.iter().sum::<u64>() >= 3 {
            let reduced = reduce_closed(&closed);
            ensure!(
                engine.count_closed(&closed).unwrap() == engine.count_closed(&reduced).unwrap(),
                "closed reduction changed count of {closed:?}"
            );
        }
    }

    // duality bijection and block structure, with the enumerator checked against the oracle
    let oracle = OracleOptions::default();
    let enumerate = EnumerateOptions::default();
    let mut networks = 0u64;
    let mut check = |net: FiniteNetwork<'_>, dual: FiniteNetwork<'_>| -> Result<(), String> {
        let fps = brute_force_fixed_points(net, oracle).unwrap();
        let fast = enumerate_fixed_points(net, enumerate).unwrap();
        ensure!(fps == fast, "enumerator differs from oracle on {net:?}");
        let mut negated: Vec<StateVector> = fps.iter().map(StateVector::negate).collect();
        negated.sort();
        ensure!(
            negated == brute_force_fixed_points(dual, oracle).unwrap(),
            "negation is not a bijection onto the dual's fixed points for {net:?}"
        );
        let sizes = net.block_sizes();
        for s in &fps {
            let mut pos = 0usize;
            for &size in &sizes {
                ensure!(s.is_constant(pos..pos + size as usize), "{s} not block-constant for {net:?}");
                pos += size as usize;
            }
        }
        networks += 1;
        Ok(())
    };
    for n in 2..=14usize {
        for index in 0..(1u64 << (n - 2)) {
            let c = open_from_operators(&ops_for(n - 2, index));
            let d = c.dualize();
            check(FiniteNetwork::Open(&c), FiniteNetwork::Open(&d))?;
        }
    }
    for n in 3..=12usize {
        for index in 0..(1u64 << n) {
            let c = ClosedChain::from_operators(&ops_for(n, index)).unwrap();
            let d = c.dualize();
            check(FiniteNetwork::Closed(&c), FiniteNetwork::Closed(&d))?;
        }
    }

    Ok(format!(
        "{checked} open tuples (left/right, reversal), {rings} rings (rotation, reflection), \
         2000 random reductions, {networks} networks (duality, blocks, enumerator)"
    ))
}

fn infinite_classification() -> Outcome {
    let two = Count::Finite(big(2));
    ensure!(count_infinite(&InfiniteChain::Uniform(Operator::And)).unwrap() == two, "(inf) != 2");
    ensure!(count_infinite(&InfiniteChain::Uniform(Operator::Or)).unwrap() == two, "(inf)!| != 2");
    ensure!(
        count_infinite(&InfiniteChain::BoundedMiddle(vec![1, 2])).unwrap() == Count::Finite(big(6)),
        "(inf,1,2,inf) != 6"
    );
    for c in [
        InfiniteChain::LeftInfinite(vec![3, 1]),
        InfiniteChain::LeftInfinite(vec![]),
        InfiniteChain::RightInfinite(vec![1, 2, 3]),
        InfiniteChain::BiInfinitePattern,
    ] {
        ensure!(count_infinite(&c).unwrap() == Count::CountablyInfinite, "{c:?} not infinite");
    }
    Ok("uniform 2, bounded middle (1,2) 6, one-sided and bi-infinite infinite".into())
}

fn performance() -> Outcome {
    let mut rng = StdRng::seed_from_u64(100_000);
    let runs: Vec<u64> = (0..100_000).map(|_| rng.gen_range(1..=9)).collect();
    let nodes: u64 = 2 + runs.iter().sum::<u64>();
    let t = tuple(&runs);
    let start = Instant::now();
    let v = count_open(&t).unwrap();
    let elapsed = start.elapsed();
    ensure!(v >= big(2), "nonsense count");
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?} (limit 1 s)");
    let chain = OpenChain::new(runs, Operator::And).unwrap();
    ensure!(
        brute_force_count(&chain, OracleOptions::default()).is_err(),
        "oracle should refuse n = {nodes}"
    );
    Ok(format!(
        "m = 100000 (n = {nodes}), {} decimal digits in {elapsed:?}; oracle refuses",
        v.to_string().len()
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 worked open example", example_1),
        ("2 worked closed example", example_2),
        ("3 base-case table", base_cases),
        ("4 open oracle sweep", open_sweep),
        ("5 closed oracle sweep", closed_sweep),
        ("6 sequence identities", sequence_identities),
        ("7 open bounds", bounds_property),
        ("8 structural properties", structural_properties),
        ("9 infinite classification", infinite_classification),
        ("10 performance", performance),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} [{:.2?}]", start.elapsed());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
