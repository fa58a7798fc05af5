//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use qcyclic::cyclic::{all_cosets, dual_defining_set, near_self_orthogonality, CyclicCode, DefiningSet};
use qcyclic::distance::{
    binary_shadow_distance, bound_from_fixed_subcode, fixed_subcode_lower_bound, min_distance_exact,
    square_root_bounds, weight_distribution, weight_distribution_difference, DistanceBound, Provenance,
    DEFAULT_BUDGET,
};
use qcyclic::duadic::{find_splittings, qr_splitting, DuadicPair};
use qcyclic::fields::{multiplicative_order, Gf4, Gf4Vector, LinearCode};
use qcyclic::quantum::{
    cyclic_zero_dim, extend_nearly_self_orthogonal, extended_duadic_quantum, secondary_constructions, Annotations,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

const FAST_LIMIT: Duration = Duration::from_secs(60);
const SLOW_LIMIT: Duration = Duration::from_secs(15 * 60);
/// Codewords drawn per code when exhaustive enumeration is skipped.
const SAMPLES: usize = 2000;
const EXHAUSTIVE_DIM: usize = 12;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn qcyclic(args: &[&str]) -> Result<(String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qcyclic"))
        .args(args)
        .env_remove("QCYCLIC_BUDGET")
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    if !out.status.success() {
        return Err(format!("{args:?} failed: {}", String::from_utf8_lossy(&out.stderr)));
    }
    Ok((String::from_utf8_lossy(&out.stdout).into_owned(), took))
}

fn odd_lengths(max: usize) -> impl Iterator<Item = usize> {
    (3..=max).step_by(2)
}

fn random_word(c: &LinearCode, rng: &mut StdRng) -> Gf4Vector {
    let mut v = Gf4Vector::zeros(c.len());
    for row in c.generator().rows() {
        v.add_scaled(Gf4::new(rng.random_range(0..4)), row);
    }
    v
}

fn table_rows() -> Outcome {
    let (csv, fast) = qcyclic(&["table", "--max-n", "23"])?;
    let got: Vec<&str> = csv.lines().skip(1).map(|l| l.split('"').nth(1).unwrap_or("")).collect();
    let want = ["[[6,0,4]]", "[[8,0,4]]", "[[14,0,6]]", "[[18,0,8]]", "[[24,0,8]]"];
    ensure(got == want, || format!("rows {got:?}"))?;
    ensure(fast < FAST_LIMIT, || format!("fast rows took {fast:?}"))?;
    let (csv, slow) = qcyclic(&["table", "--max-n", "29", "--slow"])?;
    let last = csv.lines().last().unwrap_or("");
    ensure(last.starts_with("29,") && last.contains("\"[[30,0,12]]\""), || format!("n = 29 row: {last}"))?;
    ensure(slow < SLOW_LIMIT, || format!("slow rows took {slow:?}"))?;
    Ok(format!("5 exact rows in {:.2}s; [[30,0,12]] with --slow in {:.2}s", fast.as_secs_f64(), slow.as_secs_f64()))
}

fn hexacode() -> Outcome {
    let ce = CyclicCode::new(qr_splitting(5).map_err(|e| e.to_string())?.s1().with_zero()).unwrap().to_linear();
    let x = extend_nearly_self_orthogonal(&ce).map_err(|e| e.to_string())?;
    ensure(x.e == 1 && x.len() == 6 && x.code.dim() == 3, || format!("e = {}, [{}, {}]", x.e, x.len(), x.code.dim()))?;
    ensure(x.code.is_hermitian_self_dual(), || "not Hermitian self-dual".into())?;
    let gram = x.code.generator().hermitian_gram();
    let pairs = gram.iter().flatten().count();
    ensure(pairs == 9 && gram.iter().flatten().all(|&g| g == Gf4::ZERO), || format!("Gram matrix {gram:?}"))?;
    let w = weight_distribution(&x.code, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let total: u64 = w.iter().sum();
    ensure(total == 64 && w.iter().enumerate().all(|(i, &a)| i % 2 == 0 || a == 0), || format!("weights {w:?}"))?;
    let d = min_distance_exact(&x.code, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(d.value() == Some(4), || format!("d = {d}"))?;
    Ok(format!("[6,3,4] self-dual, {pairs} Gram entries zero, weight distribution {w:?}"))
}

fn odd_weight_parities() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    let (mut codes, mut exhaustive, mut sampled) = (0, 0, 0);
    for n in odd_lengths(41) {
        for s in find_splittings(n, Some(-2)).map_err(|e| e.to_string())? {
            let p = DuadicPair::new(s).map_err(|e| e.to_string())?;
            let (even, odd) = (p.even1.to_linear(), p.odd1.to_linear());
            codes += 1;
            if odd.dim() <= EXHAUSTIVE_DIM {
                exhaustive += 1;
                let w = weight_distribution(&even, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                ensure(w.iter().enumerate().all(|(i, &a)| i % 2 == 0 || a == 0), || format!("n = {n}: C_e weights {w:?}"))?;
                let w = weight_distribution_difference(&odd, &even, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                ensure(w.iter().enumerate().all(|(i, &a)| i % 2 == 1 || a == 0), || format!("n = {n}: C_o∖C_e weights {w:?}"))?;
            } else {
                sampled += 1;
                let j = Gf4Vector::ones(n);
                for _ in 0..SAMPLES {
                    let c = random_word(&even, &mut rng);
                    ensure(c.weight().is_multiple_of(2), || format!("n = {n}: odd weight {} in C_e", c.weight()))?;
                    let mut o = c.clone();
                    o.add_scaled(Gf4::new(rng.random_range(1..4)), &j);
                    ensure(o.weight() % 2 == 1, || format!("n = {n}: even weight {} in C_o∖C_e", o.weight()))?;
                }
            }
        }
    }
    Ok(format!("{codes} pairs: {exhaustive} exhaustive (dim ≤ {EXHAUSTIVE_DIM}), {sampled} with {SAMPLES} samples each"))
}

fn one_extra_coordinate() -> Outcome {
    let (mut codes, mut with_minus_two) = (0, 0);
    for n in odd_lengths(41) {
        for s in find_splittings(n, None).map_err(|e| e.to_string())? {
            let witness = s.has_multiplier(-2);
            for half in [s.s1(), s.s2()] {
                let odd = CyclicCode::new(half.clone()).unwrap().to_linear();
                let e = odd.near_self_orthogonality();
                ensure(e == near_self_orthogonality(half), || format!("n = {n}: matrix and set values differ"))?;
                ensure((e == 1) == witness, || format!("n = {n}, {}: e = {e}, μ₋₂ witness {witness}", half.describe()))?;
                codes += 1;
                with_minus_two += usize::from(witness);
            }
        }
    }
    Ok(format!("{codes} odd-like codes, {with_minus_two} with μ₋₂, zero exceptions"))
}

fn dual_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    for n in odd_lengths(35) {
        let part = all_cosets(n, 4).map_err(|e| e.to_string())?;
        let c = part.cosets().len();
        let masks: Vec<u64> =
            if c <= 16 { (0..1u64 << c).collect() } else { (0..200).map(|_| rng.random::<u64>() & ((1 << c) - 1)).collect() };
        for m in masks {
            let members = (0..c).filter(|i| m >> i & 1 == 1).flat_map(|i| part.cosets()[i].clone());
            let a = DefiningSet::new(n, members).map_err(|e| e.to_string())?;
            let code = CyclicCode::new(a.clone()).unwrap().to_linear();
            let dual = CyclicCode::new(dual_defining_set(&a)).unwrap().to_linear();
            ensure(dual == code.hermitian_dual(), || format!("n = {n}, {}", a.describe()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} defining sets, zero exceptions"))
}

/// Defining sets closed under `μ_a`, as unions of `μ_a`-orbits of cosets.
fn invariant_sets(n: usize, a: i64) -> Vec<DefiningSet> {
    let part = all_cosets(n, 4).unwrap();
    let cosets = part.cosets();
    let mut orbit_of = vec![usize::MAX; cosets.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..cosets.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let mut orbit = vec![i];
        orbit_of[i] = orbits.len();
        let mut x = part.index_of(a * cosets[i][0] as i64);
        while orbit_of[x] == usize::MAX {
            orbit_of[x] = orbits.len();
            orbit.push(x);
            x = part.index_of(a * cosets[x][0] as i64);
        }
        orbits.push(orbit);
    }
    (0..1u64 << orbits.len())
        .map(|m| {
            let members = (0..orbits.len())
                .filter(|o| m >> o & 1 == 1)
                .flat_map(|o| orbits[o].iter().flat_map(|&c| cosets[c].clone()).collect::<Vec<_>>());
            DefiningSet::new(n, members).unwrap()
        })
        .collect()
}

fn fixed_subcode_sandwich() -> Outcome {
    let (mut checked, mut skipped) = (0, 0);
    for n in odd_lengths(41) {
        for a in (2..n as i64).filter(|&a| multiplicative_order(a, n) == Some(2)) {
            for set in invariant_sets(n, a) {
                let c = CyclicCode::new(set).unwrap();
                if c.dim() == 0 {
                    continue;
                }
                let Ok(fb) = fixed_subcode_lower_bound(&c, a, DEFAULT_BUDGET) else { continue };
                let d = min_distance_exact(&c.to_linear(), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                let (Some(d), Some(d_a)) = (d.value(), fb.d_fixed.value()) else {
                    skipped += 1;
                    continue;
                };
                ensure(fb.bound.lo <= d && d <= d_a, || {
                    format!("n = {n}, a = {a}, {}: {} ≤ {d} ≤ {d_a} fails", c.defining_set().describe(), fb.bound.lo)
                })?;
                checked += 1;
            }
        }
    }
    let lo = |d_a| bound_from_fixed_subcode(&DistanceBound::exact(d_a, Provenance::LiteratureAnnotation), 2).map(|b| b.lo);
    ensure(lo(36) == Ok(19) && lo(37) == Ok(20), || format!("d(C_a) = 36, 37 give {:?}, {:?}", lo(36), lo(37)))?;
    ensure(checked > 0 && skipped == 0, || format!("{checked} checked, {skipped} not settled"))?;
    Ok(format!("{checked} invariant codes sandwiched; d(C_a) = 36 → 19, 37 → 20"))
}

fn binary_shadow() -> Outcome {
    let mut checked = 0;
    let mut at_23 = None;
    for n in odd_lengths(31).filter(|&n| multiplicative_order(2, n) == multiplicative_order(4, n)) {
        for s in find_splittings(n, None).map_err(|e| e.to_string())? {
            for a in [s.s1().clone(), s.s2().clone(), s.s1().with_zero(), s.s2().with_zero()] {
                let q = min_distance_exact(&CyclicCode::new(a.clone()).unwrap().to_linear(), DEFAULT_BUDGET)
                    .map_err(|e| e.to_string())?;
                let b = binary_shadow_distance(&a, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                ensure(q.is_exact() && q.value() == b.value(), || format!("n = {n}, {}: {q} vs {b}", a.describe()))?;
                if n == 23 && !a.contains(0) {
                    at_23 = q.value();
                }
                checked += 1;
            }
        }
    }
    ensure(at_23 == Some(7), || format!("n = 23 gives {at_23:?}"))?;
    Ok(format!("{checked} defining sets at n ∈ {{7, 23, 31}} agree; n = 23 gives 7"))
}

fn square_roots() -> Outcome {
    let (mut pairs, mut mu1, mut mod4) = (0, 0, 0);
    for n in odd_lengths(41) {
        for s in find_splittings(n, None).map_err(|e| e.to_string())? {
            for s in [s.clone(), s.swapped()] {
                let r = square_root_bounds(&DuadicPair::new(s).unwrap(), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                ensure(!r.partial, || format!("n = {n}: distances not settled"))?;
                ensure(r.all_passed(), || format!("n = {n}: {:?}", r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()))?;
                pairs += 1;
                mu1 += usize::from(r.mu_minus_1);
                mod4 += r.checks.iter().filter(|c| c.name == "d(D) = 3 mod 4").count();
            }
        }
    }
    ensure(mod4 >= 2, || format!("only {mod4} mod-4 checks ran"))?;
    Ok(format!("{pairs} pairs; {mu1} with μ₋₁; d(D) ≡ 3 mod 4 at n = 7, 23"))
}

fn route_equivalence() -> Outcome {
    let mut checked = 0;
    for n in odd_lengths(41) {
        for s in find_splittings(n, Some(-2)).map_err(|e| e.to_string())? {
            let a = s.s1().clone();
            let one = extended_duadic_quantum(&DuadicPair::new(s).unwrap(), DEFAULT_BUDGET, &[]).map_err(|e| e.to_string())?;
            let two = cyclic_zero_dim(&a, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            let key = |p: &qcyclic::quantum::QuantumParams| (p.n, p.k, p.d.lo, p.d.hi);
            ensure(key(&one.params) == key(&two.params) && one.params.d.is_exact(), || {
                format!("n = {n}, {}: {} vs {}", a.describe(), one.params, two.params)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} inputs give identical [[n+1,0,d]]"))
}

fn research_scale() -> Outcome {
    let mut lines = Vec::new();
    for (n, leaders, target) in [("141", "2,3,10", 20u64), ("123", "1,2,6,7,9,11", 22)] {
        let (out, took) = qcyclic(&["--format", "json", "quantum", "-n", n, "--leaders", leaders])?;
        let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        let lo = v["d_lo"].as_u64().unwrap_or(0);
        let src = v["d_lo_src"].as_str().unwrap_or("");
        let honest = lo >= target || src == "budget-exhausted";
        ensure(honest, || format!("n = {n}: lo {lo} from {src} below {target} without budget provenance"))?;
        lines.push(format!("n = {n}: [[{},0,{lo}-{}]] lo {src} ({:.1}s)", v["n"], v["d_hi"], took.as_secs_f64()));
    }
    Ok(lines.join("; "))
}

fn secondary() -> Outcome {
    let ann = Annotations::from_json(r#"[{"n": 240, "k": 0, "d": 32, "source": "annotated"}]"#).map_err(|e| e.to_string())?;
    let q = ann.quantum(240, 0).ok_or("annotation not found")?.to_params().map_err(|e| e.to_string())?;
    let got: Vec<String> =
        secondary_constructions(&q, 9).map_err(|e| e.to_string())?.iter().filter(|p| p.k == 0).map(|p| p.to_string()).collect();
    let want: Vec<String> = (1..=9).map(|i| format!("[[{},0,{}]]", 240 - i, 32 - i)).collect();
    ensure(got == want, || format!("{got:?}"))?;
    Ok(format!("{} through {}", want[0], want[8]))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("table reproduction", table_rows),
        ("hexacode", hexacode),
        ("odd-weight duadic", odd_weight_parities),
        ("e = 1 iff μ₋₂", one_extra_coordinate),
        ("dual defining set oracle", dual_oracle),
        ("fixed-subcode sandwich", fixed_subcode_sandwich),
        ("binary shadow", binary_shadow),
        ("square-root bounds", square_roots),
        ("route equivalence", route_equivalence),
        ("research scale, bound-honest", research_scale),
        ("secondary constructions", secondary),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
