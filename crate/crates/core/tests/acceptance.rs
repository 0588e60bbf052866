//! Acceptance gate: one PASS/FAIL line per criterion.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use hookseries::abacus::{
    core_hook_product, core_weight_from_v, h_set, macdonald_constant, max_t, phi_n, phi_v,
    phi_v_from_n, phi_v_inverse, vandermonde_side, NCoding, VCoding,
};
use hookseries::identities::{
    kostant_positivity, verify_core_hook_sums, verify_distinct_parts_hook, verify_exp_log,
    verify_euler_reversion, verify_exponential_limit, verify_extension_ty, verify_ht_parity,
    verify_ht_size, verify_hook_t_count, verify_interpolation_showcase, verify_inverse_square_sum,
    verify_macdonald_odd, verify_marked_hook, verify_nekrasov_okounkov,
    verify_odd_inverse_square_sum, verify_pentagonal, verify_pentagonal_hook,
    verify_triple_product, verify_core_interpolation, IdentityReport,
};
use hookseries::partitions::{enumerate_partitions, hook_lengths, hook_lengths_mod_t, is_t_core};
use hookseries::quotient::{compose, decompose, encode_word};
use hookseries::{HookMultiset, Partition, Rational};
use num_bigint::BigInt;

type Outcome = Result<Vec<String>, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn report(r: hookseries::Result<IdentityReport>) -> Result<(), String> {
    let r = r.map_err(|e| e.to_string())?;
    ensure(r.verified, r.to_string())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<String, String> {
    let took = start.elapsed();
    ensure(took < limit, format!("{what} took {took:?}, limit {limit:?}"))?;
    Ok(format!("{what}: {:.1}s (limit {}s)", took.as_secs_f64(), limit.as_secs()))
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn cores(t: u32, max: u32) -> Vec<Partition> {
    (0..=max)
        .flat_map(enumerate_partitions)
        .filter(|p| is_t_core(p, t).unwrap())
        .collect()
}

fn c1_symbolic_z() -> Outcome {
    let start = Instant::now();
    report(verify_nekrasov_okounkov(12))?;
    Ok(vec![within(start, Duration::from_secs(60), "degrees 0..12")?])
}

fn c2_symbolic_yz() -> Outcome {
    let start = Instant::now();
    for t in 1..=3 {
        report(verify_extension_ty(10, t))?;
    }
    Ok(vec![within(start, Duration::from_secs(120), "t = 1,2,3, degrees 0..10")?])
}

fn c3_hook_count() -> Outcome {
    for t in 1..=3 {
        report(verify_hook_t_count(12, t))?;
    }
    Ok(vec![])
}

fn c4_core_codings() -> Outcome {
    let mut checked = 0;
    for t in [3u32, 5, 7] {
        for lambda in cores(t, 20) {
            let v = phi_v(&lambda, t).map_err(|e| e.to_string())?;
            let n = phi_n(&lambda, t).map_err(|e| e.to_string())?;
            ensure(core_weight_from_v(&v, t) == Ok(u64::from(lambda.size())), format!("weight {lambda} t={t}"))?;
            ensure(
                core_hook_product(&lambda, t).unwrap() == vandermonde_side(&v, t).unwrap(),
                format!("hook product {lambda} t={t}"),
            )?;
            ensure(phi_v_inverse(&v, t).as_ref() == Ok(&lambda), format!("round trip {lambda} t={t}"))?;
            ensure(phi_v_from_n(&n, t).as_ref() == Ok(&v), format!("two routes {lambda} t={t}"))?;
            checked += 1;
        }
    }
    let lambda = p(&[14, 10, 6, 6, 4, 4, 4, 2, 2, 2]);
    let v = phi_v(&lambda, 5).unwrap();
    ensure(v.values() == [5, 16, 2, -12, -11], format!("V-coding {:?}", v.values()))?;
    ensure(max_t(&h_set(&lambda, 5).unwrap()).values() == [-5, -4, 12, 23, 9], "U-coding")?;
    ensure(phi_n(&lambda, 5).unwrap().values() == [-2, -2, 1, 3, 0], "N-coding")?;
    ensure(core_weight_from_v(&v, 5) == Ok(54), "weight 54")?;
    let product = Rational::from_integer(BigInt::from(60035976));
    ensure(core_hook_product(&lambda, 5).unwrap() == product, "product 60035976")?;
    ensure(vandermonde_side(&v, 5).unwrap() == product, "vandermonde 60035976")?;
    ensure(phi_v_inverse(&VCoding::new(vec![5, 16, 2, -12, -11]).unwrap(), 5) == Ok(lambda.clone()), "inverse")?;
    ensure(
        phi_v_from_n(&NCoding::new(vec![-2, -2, 1, 3, 0]).unwrap(), 5).as_ref() == Ok(&v),
        "N to V",
    )?;
    Ok(vec![format!("{checked} cores checked")])
}

fn c5_core_quotient() -> Outcome {
    let mut checked = 0;
    for n in 0..=15 {
        for lambda in enumerate_partitions(n) {
            for t in 2..=5u32 {
                let cq = decompose(&lambda, t).unwrap();
                ensure(is_t_core(&cq.core, t).unwrap(), format!("core of {lambda}, t={t}"))?;
                ensure(cq.weight() == u64::from(n), format!("weight {lambda}, t={t}"))?;
                let halved: HookMultiset = hook_lengths_mod_t(&lambda, t)
                    .unwrap()
                    .to_sorted_vec()
                    .into_iter()
                    .map(|h| h / t)
                    .collect();
                let union = cq.quotient.iter().fold(HookMultiset::new(), |acc, q| acc.union(&hook_lengths(q)));
                ensure(halved == union, format!("hooks {lambda}, t={t}"))?;
                ensure(compose(&cq).as_ref() == Ok(&lambda), format!("round trip {lambda}, t={t}"))?;
                checked += 1;
            }
        }
    }
    let lambda = p(&[6, 5, 3, 3]);
    ensure(encode_word(&lambda).to_string() == "…0001110.011010111…", "canonical word")?;
    let cq = decompose(&lambda, 2).unwrap();
    ensure(cq.core == p(&[2, 1]), format!("core {}", cq.core))?;
    ensure(cq.quotient[1] == p(&[2, 2, 1]), format!("second entry {}", cq.quotient[1]))?;
    // The even positions of the word read …00110111…, whose partition is a single row
    // of two boxes with hooks {2, 1}. The printed value (2,1) would give
    // weight 3 + 2·(3 + 5) = 19 ≠ 17.
    ensure(cq.quotient[0] == p(&[2]), format!("first entry {}", cq.quotient[0]))?;
    let first_hooks: HookMultiset = [2, 1].into_iter().collect();
    ensure(hook_lengths(&cq.quotient[0]) == first_hooks, "first entry hooks {2,1}")?;
    let literal = hookseries::quotient::CoreQuotient { core: p(&[2, 1]), quotient: vec![p(&[2, 1]), p(&[2, 2, 1])], t: 2 };
    ensure(literal.weight() != 17, "printed first entry is inconsistent with the weight identity")?;
    Ok(vec![
        format!("{checked} (λ, t) pairs checked"),
        "note: worked example gives first quotient entry (2) with hooks {2,1}; the printed (2,1) contradicts its own section word and weight".into(),
    ])
}

fn c6_macdonald() -> Outcome {
    report(verify_macdonald_odd(12, 3))?;
    report(verify_macdonald_odd(8, 5))?;
    ensure(macdonald_constant(3).unwrap() == Rational::new((-1).into(), 2.into()), "c_0 at t=3")?;
    ensure(macdonald_constant(5).unwrap() == Rational::new(1.into(), 288.into()), "c_0 at t=5")?;
    Ok(vec![])
}

fn c7_kostant() -> Outcome {
    report(kostant_positivity(12))?;
    Ok(vec![])
}

fn c8_reversion() -> Outcome {
    report(verify_euler_reversion(12))?;
    Ok(vec![])
}

fn c9_scalar() -> Outcome {
    report(verify_marked_hook(9))?;
    for t in 1..=3 {
        report(verify_core_hook_sums(6, t))?;
    }
    Ok(vec![])
}

fn c10_specializations() -> Outcome {
    report(verify_pentagonal_hook(25))?;
    report(verify_distinct_parts_hook(20))?;
    for t in 1..=3 {
        report(verify_ht_size(10, t))?;
        report(verify_ht_parity(10, t))?;
        report(verify_core_interpolation(10, t))?;
        report(verify_exponential_limit(10, t))?;
        report(verify_inverse_square_sum(10, t))?;
    }
    report(verify_odd_inverse_square_sum(15))?;
    for t in [1, 2, 3, 6] {
        report(verify_interpolation_showcase(12, t))?;
    }
    Ok(vec![])
}

fn c11_classical() -> Outcome {
    report(Ok(verify_pentagonal(30)))?;
    report(Ok(verify_triple_product(30)))?;
    report(verify_exp_log(20))?;
    Ok(vec![])
}

fn run_bin(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hookseries"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn c12_determinism() -> Outcome {
    let args = ["verify", "--id", "all", "--degree", "8", "--format", "json"];
    let (code_a, a) = run_bin(&args)?;
    let (code_b, b) = run_bin(&["verify", "--id", "all", "--degree", "8", "--format", "json", "--jobs", "4"])?;
    ensure(code_a == 0 && code_b == 0, format!("exit codes {code_a}, {code_b}"))?;
    ensure(a == b, "JSON differs between runs")?;
    let reports: Vec<IdentityReport> = serde_json::from_slice(&a).map_err(|e| e.to_string())?;
    ensure(reports.iter().all(|r| r.verified), "unverified report")?;
    let start = Instant::now();
    let (code, _) = run_bin(&["verify", "--jobs", "4"])?;
    ensure(code == 0, format!("default suite exit code {code}"))?;
    Ok(vec![
        format!("{} reports, {} bytes, identical", reports.len(), a.len()),
        within(start, Duration::from_secs(600), "default suite")?,
    ])
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("hook product (1 - z/h^2) identity, z symbolic", c1_symbolic_z),
        ("(y, z) extension over hooks divisible by t", c2_symbolic_yz),
        ("hooks equal to t counted by y", c3_hook_count),
        ("V-coding weight and hook product for odd cores", c4_core_codings),
        ("core/quotient bijection", c5_core_quotient),
        ("Euler product power t^2 - 1 via V-codings", c6_macdonald),
        ("coefficients of Euler product powers", c7_kostant),
        ("reversion of x times the Euler product", c8_reversion),
        ("scalar hook sums", c9_scalar),
        ("specializations", c10_specializations),
        ("pentagonal, triple product, exp form", c11_classical),
        ("determinism and serialization", c12_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(notes) => {
                println!("[PASS] {:02} {name} ({secs:.1}s)", i + 1);
                for n in notes {
                    println!("       {n}");
                }
            }
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {:02} {name} ({secs:.1}s): {msg}", i + 1);
            }
        }
    }
    let _ = panic::take_hook();
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
