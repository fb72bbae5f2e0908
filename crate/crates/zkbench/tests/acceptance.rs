//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zkbench::bench::{BenchConfig, BenchReport};
use zkbench::report::{emit_report, parse_csv, ReportFormat};
use zkbench_core::algebra::{Field, Fp, Fq, Fr, Polynomial, PrimeField};
use zkbench_core::commit::Transcript;
use zkbench_core::pairing::{pairing, G1Point, G2Point};
use zkbench_core::snark::{
    build_cubic_circuit, check_pairings, generate_witness, prove, r1cs_to_qap,
    serialize_snark_proof, trusted_setup, verify_snark, ProvingKey, Qap, SnarkProof, ToxicWaste,
    VerificationKey,
};
use zkbench_core::stark::{
    build_domains, constraint_quotients, fri_commit, generate_program_constraints, generate_trace,
    interpolate_trace, replay_challenges, serialize_stark_proof, stark_prove_with, stark_verify,
    Domains, StarkParams, StarkProof, Trace,
};

const SEED: u64 = 20240607;
const Q: u128 = 3221225473;

type Outcome = Result<String, String>;
type Mutation = (&'static str, fn(&mut SnarkProof));

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fr(v: u64) -> Fr {
    Fr::from_u64(v)
}

/// Public output computed with integers, independent of the field code.
fn cubic(x: u64) -> Fr {
    let x = BigUint::from(x);
    Fr::from_biguint(&(&x * &x * &x + &x + 5u32))
}

struct Snark {
    qap: Qap,
    pk: ProvingKey,
    vk: VerificationKey,
}

fn snark_setup(seed: u64) -> Snark {
    let qap = r1cs_to_qap(&build_cubic_circuit()).expect("qap");
    let (pk, vk) = trusted_setup(&qap, ToxicWaste::from_seed(seed, &qap)).expect("setup");
    Snark { qap, pk, vk }
}

fn snark_prove(s: &Snark, x: u64) -> SnarkProof {
    let w = generate_witness(&build_cubic_circuit(), &fr(x)).expect("witness");
    prove(&s.pk, &w, &s.qap).expect("prove")
}

fn c1_snark_end_to_end() -> Outcome {
    let start = Instant::now();
    let s = snark_setup(SEED);
    let proof = snark_prove(&s, 3);
    let checks = check_pairings(&s.vk, &proof, &[cubic(3)]).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(
        checks.0 == [true; 5],
        format!("pairing checks {:?}", checks.0),
    )?;
    ensure(
        verify_snark(&s.vk, &proof, &[fr(35)]),
        "verify(y=35) returned false",
    )?;
    ensure(
        elapsed < Duration::from_secs(60),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "5/5 pairing checks, pipeline {:.2} s",
        elapsed.as_secs_f64()
    ))
}

fn c2_snark_soundness() -> Outcome {
    let s = snark_setup(SEED);
    let honest = snark_prove(&s, 3);
    let y = [fr(35)];
    let mutations: [Mutation; 8] = [
        ("pi_a", |p| p.pi_a = p.pi_a.double()),
        ("pi_a'", |p| p.pi_a_prime = p.pi_a_prime.double()),
        ("pi_b", |p| p.pi_b = p.pi_b.double()),
        ("pi_b'", |p| p.pi_b_prime = p.pi_b_prime.double()),
        ("pi_c", |p| p.pi_c = p.pi_c.double()),
        ("pi_c'", |p| p.pi_c_prime = p.pi_c_prime.double()),
        ("pi_h", |p| p.pi_h = &p.pi_h + &G1Point::generator()),
        ("pi_kp", |p| p.pi_kp = p.pi_kp.double()),
    ];
    let mut rejected = 0;
    for (name, mutate) in mutations {
        let mut bad = honest.clone();
        mutate(&mut bad);
        ensure(bad != honest, format!("{name} mutation was a no-op"))?;
        ensure(
            !verify_snark(&s.vk, &bad, &y),
            format!("mutated {name} accepted"),
        )?;
        rejected += 1;
    }
    ensure(
        !verify_snark(&s.vk, &honest, &[fr(36)]),
        "public y=36 accepted",
    )?;
    rejected += 1;
    Ok(format!("{rejected}/9 mutations rejected"))
}

fn c3_snark_size() -> Outcome {
    let s = snark_setup(SEED);
    let random = ChaCha8Rng::seed_from_u64(SEED).gen::<u32>() as u64;
    let mut sizes = Vec::new();
    for x in [0, 3, 7, random] {
        let proof = snark_prove(&s, x);
        ensure(
            verify_snark(&s.vk, &proof, &[cubic(x)]),
            format!("x={x} did not verify"),
        )?;
        sizes.push(serialize_snark_proof(&proof).len());
    }
    ensure(sizes.iter().all(|&n| n == 576), format!("sizes {sizes:?}"))?;
    Ok(format!("576 B for x in {{0, 3, 7, {random}}}"))
}

fn c4_stark_statement() -> Outcome {
    let t = generate_trace();
    let v: Vec<u128> = t.values().iter().map(|x| x.value() as u128).collect();
    ensure(v.len() == 1023, format!("length {}", v.len()))?;
    ensure(v[0] == 1 && v[1] == 3141592, "initial values")?;
    ensure(v[1022] == 2338775057, format!("trace[1022] = {}", v[1022]))?;
    // Recurrence rechecked in u128 arithmetic.
    for n in 0..1021 {
        ensure(
            v[n + 2] == (v[n + 1] * v[n + 1] + v[n] * v[n]) % Q,
            format!("recurrence breaks at {n}"),
        )?;
    }
    Ok("trace[0]=1, trace[1]=3141592, trace[1022]=2338775057, 1021 steps checked".into())
}

fn c5_stark_end_to_end(proof: &StarkProof, prove_time: Duration) -> Outcome {
    ensure(stark_verify(proof), "honest proof rejected")?;
    ensure(
        prove_time < Duration::from_secs(600),
        format!("proving took {prove_time:?}"),
    )?;
    Ok(format!(
        "verified, proving {:.2} s",
        prove_time.as_secs_f64()
    ))
}

fn c6_stark_soundness(proof: &StarkProof) -> Outcome {
    let d = build_domains();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let honest = generate_trace();
    for _ in 0..10 {
        let pos = rng.gen_range(0..honest.len());
        let mut v = honest.values().to_vec();
        v[pos] += Fq::one();
        let p = interpolate_trace(&Trace::from_values(v), &d);
        let (_, rems) = constraint_quotients(&p, &d).map_err(|e| e.to_string())?;
        ensure(
            rems.iter().any(|r| !r.is_zero()),
            format!("corruption at {pos} left zero remainders"),
        )?;
        ensure(
            generate_program_constraints(&p, &d).is_err(),
            format!("corruption at {pos} accepted"),
        )?;
    }

    let mut cases: Vec<(&str, StarkProof)> = Vec::new();
    let mut p = proof.clone();
    p.queries[0].trace[0].value += Fq::one();
    cases.push(("trace opening", p));
    let mut p = proof.clone();
    p.fri_roots[0][7] ^= 0x80;
    cases.push(("first FRI root", p));
    let mut p = proof.clone();
    let last = p.fri_roots.len() - 1;
    p.fri_roots[last][0] ^= 1;
    cases.push(("last FRI root", p));
    let mut p = proof.clone();
    p.final_constant += Fq::one();
    cases.push(("final constant", p));
    let mut p = proof.clone();
    p.queries[1].layers[5][0].value += Fq::one();
    cases.push(("FRI layer opening", p));
    for (name, bad) in &cases {
        ensure(!stark_verify(bad), format!("mutated {name} accepted"))?;
    }
    Ok(format!(
        "10/10 trace corruptions rejected by prover, {}/5 proof mutations rejected",
        cases.len()
    ))
}

fn c7_fri_structure(real_layers: usize) -> Outcome {
    let d = build_domains();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut coeffs: Vec<Fq> = (0..2046).map(|_| Fq::new(rng.gen())).collect();
    coeffs[2045] = Fq::one();
    let cp = Polynomial::new(coeffs);
    let (layers, constant) = fri_commit(&cp, &d.eval_domain, &mut Transcript::new(b"degree-2045"))
        .map_err(|e| e.to_string())?;
    let folds = layers.len() - 1;
    let last = layers.last().expect("layers");
    ensure(cp.degree() == 2045, "input degree")?;
    ensure(folds == 11, format!("{folds} folding layers"))?;
    ensure(
        last.poly.degree() == 0 && last.poly.coeff(0) == constant,
        "final layer not constant",
    )?;
    for w in layers.windows(2) {
        let (a, b) = (w[0].poly.degree(), w[1].poly.degree());
        ensure(b <= (a + 1) / 2, format!("degree {a} folded to {b}"))?;
    }
    // The real composition polynomial has degree 1023, hence 10 folds.
    ensure(
        real_layers == 10,
        format!("real proof has {real_layers} layers"),
    )?;
    Ok(format!(
        "degree 2045 -> {folds} folds, final degree 0; statement proof uses {real_layers} folds"
    ))
}

fn c8_size_ratio(stark_bytes: usize) -> Outcome {
    let s = snark_setup(SEED);
    let snark_bytes = serialize_snark_proof(&snark_prove(&s, 3)).len();
    let ratio = stark_bytes as f64 / snark_bytes as f64;
    ensure(ratio > 50.0, format!("ratio {ratio:.1}"))?;
    Ok(format!("{stark_bytes} B / {snark_bytes} B = {ratio:.1}x"))
}

fn c9_determinism(proof: &StarkProof) -> Outcome {
    let a = serialize_snark_proof(&snark_prove(&snark_setup(SEED), 3));
    let b = serialize_snark_proof(&snark_prove(&snark_setup(SEED), 3));
    ensure(a == b, "SNARK proofs differ for the same seed")?;
    let (again, challenges) =
        stark_prove_with(&StarkParams::default(), &mut ()).map_err(|e| e.to_string())?;
    ensure(
        serialize_stark_proof(&again) == serialize_stark_proof(proof),
        "STARK proofs differ",
    )?;
    let replayed = replay_challenges(proof).map_err(|e| e.to_string())?;
    ensure(replayed == challenges, "verifier challenge replay diverges")?;
    Ok(format!(
        "byte-identical proofs; replay matches 3 alphas, {} betas, {} query indices",
        challenges.betas.len(),
        challenges.query_indices.len()
    ))
}

fn field_suite<F: PrimeField>(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = F::modulus();
    for _ in 0..1000 {
        let raw: [BigUint; 3] =
            core::array::from_fn(|_| BigUint::from_bytes_be(&rng.gen::<[u8; 32]>()) % m);
        let [x, y, z] = raw.clone().map(|v| F::from_biguint(&v));
        let [a, b, _] = raw;
        let ok = (x.clone() + &y).to_biguint() == (&a + &b) % m
            && (x.clone() * &y).to_biguint() == (&a * &b) % m
            && (x.clone() - &y).to_biguint() == (&a + m - &b) % m
            && x.clone() * &(y.clone() + &z) == x.clone() * &y + x.clone() * &z
            && (x.clone() * &y) * &z == x.clone() * &(y.clone() * &z)
            && (x.is_zero() || x.clone() * &x.inverse().unwrap() == F::one());
        ensure(ok, format!("axiom failure in {} at a={a}", F::ID.label()))?;
    }
    Ok(())
}

fn c10_property_suites(domains: &Domains) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    field_suite::<Fq>(&mut rng)?;
    field_suite::<Fr>(&mut rng)?;
    field_suite::<Fp>(&mut rng)?;

    for i in 0..200 {
        let a = Polynomial::new(
            (0..rng.gen_range(0..80))
                .map(|_| Fq::new(rng.gen()))
                .collect(),
        );
        let mut bc: Vec<Fq> = (0..rng.gen_range(1..40))
            .map(|_| Fq::new(rng.gen()))
            .collect();
        *bc.last_mut().expect("nonempty") = Fq::new(rng.gen_range(1..Fq::MODULUS));
        let b = Polynomial::new(bc);
        let (q, r) = a.divrem(&b).map_err(|e| e.to_string())?;
        ensure(
            &(&q * &b) + &r == a && r.degree() < b.degree(),
            format!("divrem pair {i}"),
        )?;
    }

    let trace = generate_trace();
    let p = interpolate_trace(&trace, domains);
    for (i, v) in trace.values().iter().enumerate() {
        ensure(
            p.eval(&domains.trace_domain[i]) == *v,
            format!("P(g^{i}) != trace[{i}]"),
        )?;
    }

    let g1 = G1Point::generator();
    let g2 = G2Point::generator();
    let base = pairing(&g1, &g2);
    for i in 0..20 {
        let a = Fr::from_biguint(&BigUint::from_bytes_be(&rng.gen::<[u8; 32]>()));
        let b = Fr::from_biguint(&BigUint::from_bytes_be(&rng.gen::<[u8; 32]>()));
        ensure(
            pairing(&g1.mul(&a), &g2.mul(&b)) == base.pow(&(a * &b)),
            format!("bilinearity case {i}"),
        )?;
    }
    Ok(
        "3x1000 field triples, 200 divrem pairs, 1023-point interpolation, 20 bilinearity cases"
            .into(),
    )
}

fn c11_bench_report() -> Outcome {
    let cfg = BenchConfig {
        iterations: 1,
        warmup_iterations: 0,
        seed: SEED,
        ..BenchConfig::default()
    };
    let report = BenchReport::run(&cfg).map_err(|e| e.to_string())?;
    let results = report.results();
    let csv = emit_report(&results, ReportFormat::Csv).map_err(|e| e.to_string())?;
    let parsed = parse_csv(&csv).map_err(|e| e.to_string())?;
    ensure(
        parsed == [report.snark.row.clone(), report.stark.row.clone()],
        "CSV round trip lost data",
    )?;
    ensure(csv.lines().count() == 3, "CSV is not header + 2 rows")?;
    let md = emit_report(&results, ReportFormat::Markdown).map_err(|e| e.to_string())?;
    for label in [
        "Proof Gen Time",
        "Proof Verif Time",
        "Proof Size",
        "Trusted Setup",
        "Security Assump",
    ] {
        ensure(md.contains(label), format!("Markdown lacks {label}"))?;
    }
    let mut failed = report.stark.clone();
    failed.verified = false;
    ensure(
        emit_report(&[&report.snark, &failed], ReportFormat::Csv).is_err(),
        "unverified run was reported",
    )?;
    Ok("CSV round-trips, Markdown has all five labels, unverified runs refused".into())
}

fn main() {
    let domains = build_domains();
    let start = Instant::now();
    let stark = stark_prove_with(&StarkParams::default(), &mut ()).map(|(p, _)| p);
    let prove_time = start.elapsed();

    let mut results: Vec<(u32, &str, Outcome)> = vec![
        (1, "SNARK end-to-end", c1_snark_end_to_end()),
        (2, "SNARK soundness probes", c2_snark_soundness()),
        (3, "SNARK proof size", c3_snark_size()),
        (4, "STARK statement", c4_stark_statement()),
    ];
    match &stark {
        Ok(proof) => {
            let bytes = serialize_stark_proof(proof).len();
            results.push((
                5,
                "STARK end-to-end",
                c5_stark_end_to_end(proof, prove_time),
            ));
            results.push((6, "STARK soundness", c6_stark_soundness(proof)));
            results.push((7, "FRI structure", c7_fri_structure(proof.num_layers())));
            results.push((8, "size ratio", c8_size_ratio(bytes)));
            results.push((9, "determinism", c9_determinism(proof)));
        }
        Err(e) => {
            for (n, name) in [
                (5, "STARK end-to-end"),
                (6, "STARK soundness"),
                (7, "FRI structure"),
                (8, "size ratio"),
                (9, "determinism"),
            ] {
                results.push((n, name, Err(format!("STARK proving failed: {e}"))));
            }
        }
    }
    results.push((10, "property suites", c10_property_suites(&domains)));
    results.push((11, "bench report", c11_bench_report()));

    let mut failures = 0;
    for (n, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("criterion {n:>2} FAIL  {name}: {why}");
            }
        }
    }
    println!("{} passed, {failures} failed", results.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
