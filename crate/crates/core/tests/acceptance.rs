//! One check per acceptance criterion; each prints a PASS/FAIL line and the
//! test fails if any criterion does.

mod common;

use std::collections::BTreeSet;
use std::process::Command;

use common::*;
use locgenus::arith::{padic_decompose, Decomposition, PAdicApprox, Rat};
use locgenus::connecting::{beta, Twist};
use locgenus::genus::*;
use locgenus::rankone::{similar, Height, HeightSequence, Localization, RankOneGroup};
use locgenus::text::{parse_descriptor, print_descriptor};
use num_bigint::BigInt;
use rand::Rng;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn kernel_roundtrip() -> Check {
    let mut r = rng(1);
    for _ in 0..200 {
        let a = group(&mut r);
        let d = beta(&a);
        for _ in 0..100 {
            let q = rational(&mut r);
            let want = a.contains(&q).unwrap();
            ensure(d.kernel().contains(&q).unwrap() == want, || format!("kernel of {a:?} at {q}"))?;
            ensure(d.eval(&q).unwrap().is_zero() == want, || format!("eval of {a:?} at {q}"))?;
        }
    }
    Ok(())
}

fn similarity_laws() -> Check {
    let mut r = rng(2);
    for _ in 0..500 {
        let s = heights(&mut r);
        let t = perturb(&mut r, &s);
        let u = perturb(&mut r, &t);
        ensure(similar(&s, &s), || format!("reflexivity {s:?}"))?;
        ensure(similar(&s, &t) == similar(&t, &s), || format!("symmetry {s:?} {t:?}"))?;
        ensure(!(similar(&s, &t) && similar(&t, &u)) || similar(&s, &u), || {
            format!("transitivity {s:?} {t:?} {u:?}")
        })?;
    }
    let z = HeightSequence::integers();
    let finite_dev = HeightSequence::new(Height::ZERO, [(p(2), Height::Finite(3)), (p(7), Height::Finite(1))]);
    let shifted = HeightSequence::constant(Height::Finite(1));
    let moved = HeightSequence::new(Height::ZERO, [(p(5), Height::Infinity)]);
    ensure(similar(&z, &finite_dev), || "finite deviation".into())?;
    ensure(!similar(&z, &shifted), || "default shift".into())?;
    ensure(!similar(&z, &moved), || "infinity mismatch".into())
}

fn rational_genus_invariant() -> Check {
    let mut r = rng(3);
    for _ in 0..20 {
        let a = group(&mut r);
        let base = classify_rational_genus(&RationalGenusElement::new(3, beta(&a)).unwrap());
        for _ in 0..50 {
            let num = r.gen_range(1i64..500) * if r.gen_bool(0.5) { -1 } else { 1 };
            let mut d = beta(&a).precomposed(&Rat::new(num, r.gen_range(1i64..500))).unwrap();
            for _ in 0..r.gen_range(0..3) {
                let q = small_prime(&mut r);
                let m = r.gen_range(1..3);
                let u = loop {
                    let u = r.gen_range(1..q.get().pow(m));
                    if u % q.get() != 0 {
                        break u;
                    }
                };
                d = d.twisted(q, Twist::new(q, m, u).unwrap());
            }
            let y = RationalGenusElement::new(3, d).unwrap();
            ensure(classify_rational_genus(&y) == base, || format!("perturbation of {a:?}"))?;
        }
    }
    // ∞ at distinct subsets of the first six primes: pairwise dissimilar
    let first = primes_to(13);
    let classes: BTreeSet<_> = (0u32..50)
        .map(|mask| {
            let ex = first
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &q)| (q, Height::Infinity));
            let a = RankOneGroup::new(HeightSequence::new(Height::ZERO, ex));
            classify_rational_genus(&RationalGenusElement::new(5, beta(&a)).unwrap())
        })
        .collect();
    ensure(classes.len() == 50, || format!("only {} distinct classes", classes.len()))
}

fn connectivity_correspondence() -> Check {
    let mut r = rng(4);
    for _ in 0..200 {
        let a = group(&mut r);
        let d = beta(&a).precomposed(&Rat::new(r.gen_range(1i64..50), r.gen_range(1i64..50))).unwrap();
        let kernel = d.kernel().clone();
        let y = RationalGenusElement::new(7, d).unwrap();
        let connected = is_n_minus_1_connected(&y);
        ensure(connected == kernel.is_pseudo_integers(), || format!("pseudo-integers {a:?}"))?;
        let local = primes_to(50).into_iter().all(|q| kernel.localize(q) == Localization::IsoToZp)
            && !kernel.heights().default_height().is_infinite();
        ensure(connected == local, || format!("localization {a:?}"))?;
    }
    Ok(())
}

fn nplus_bijection() -> Check {
    let mut r = rng(5);
    for q in primes_to(50) {
        for k in 0..=10u32 {
            for _ in 0..5 {
                let u = loop {
                    let u: i64 = r.gen_range(-1_000_000..1_000_000);
                    if u % q.get() as i64 != 0 {
                        break u;
                    }
                };
                let z = BigInt::from(q.get()).pow(k) * u;
                let approx = PAdicApprox::from_integer(q, 64, &z).unwrap();
                let class = classifying_map_class(3, q, &approx).unwrap();
                ensure(class == NPlus::Nat(k), || format!("{z} at {q} gave {class:?}"))?;
                let neg = classifying_map_class(3, q, &approx.neg()).unwrap();
                ensure(neg == class, || format!("sign of {z} at {q}"))?;
                ensure(
                    matches!(padic_decompose(&approx).unwrap(), Decomposition::PowerTimesUnit { exponent, .. } if exponent == k),
                    || format!("decomposition of {z}"),
                )?;
            }
        }
        let zero = PAdicApprox::zero(q, 16).unwrap();
        ensure(classifying_map_class(3, q, &zero).unwrap() == NPlus::Star, || format!("zero at {q}"))?;
    }
    Ok(())
}

fn fingerprint_inversion() -> Check {
    for n in [3, 5, 7] {
        for q in primes_to(50) {
            for k in [NPlus::Star].into_iter().chain((0..=10).map(NPlus::Nat)) {
                let y = build_fake_sphere(n, q, k).map_err(|e| e.to_string())?;
                let got = classify_postnikov_genus(&y).map_err(|e| e.to_string())?;
                ensure(&got == y.descriptor(), || format!("n={n} p={q} k={k:?}"))?;
                ensure(got.get(q) == k, || format!("entry n={n} p={q} k={k:?}"))?;
            }
        }
    }
    Ok(())
}

fn truncated_cardinality() -> Check {
    let prime_count = |bound: u64| (2..=bound).filter(|&m| (2..m).all(|d| m % d != 0)).count() as u32;
    for (bound, max, expected) in [(3, 1, 9), (10, 2, 256), (13, 1, 243)] {
        let listing = enumerate_postnikov_genus(3, bound, max).map_err(|e| e.to_string())?;
        let oracle = (max as usize + 2).pow(prime_count(bound));
        ensure(listing.len() == oracle, || {
            format!("P={bound} K={max}: {} listed, (K+2)^pi(P) = {oracle}", listing.len())
        })?;
        ensure(listing.len() == expected, || {
            format!(
                "P={bound} K={max}: expected {expected}, listed {} = {}^{}",
                listing.len(),
                max + 2,
                prime_count(bound)
            )
        })?;
        let distinct: BTreeSet<_> = listing.iter().map(print_descriptor).collect();
        ensure(distinct.len() == expected, || format!("duplicates at P={bound}"))?;
    }
    Ok(())
}

fn complex_projective_rule() -> Check {
    for n in 1..=4u32 {
        for q in primes_to(13) {
            for k in 0..=5u32 {
                let exps = NPlusSequence::new(NPlus::Nat(0), [(q, NPlus::Nat(k))]);
                let space = FakeProjectiveSpace::new(n, exps).map_err(|e| e.to_string())?;
                let model = space.pullback_over_fiber().map_err(|e| e.to_string())?;
                let got = fingerprint(&model, q).map_err(|e| e.to_string())?;
                ensure(got == NPlus::Nat(n * k), || format!("n={n} p={q} k={k}: {got:?}"))?;
                // the degree on the cover, read p-adically
                let degree = BigInt::from(space.degree(q)).pow(n);
                let class = classifying_map_class(2 * n + 1, q, &PAdicApprox::from_integer(q, 64, &degree).unwrap())
                    .map_err(|e| e.to_string())?;
                ensure(class == got, || format!("degree route n={n} p={q} k={k}"))?;
            }
        }
    }
    Ok(())
}

fn verdicts() -> Check {
    let cases = [
        ("S^3", GenusFunctor::Neisendorfer, "singleton {S^3}"),
        ("S^5", GenusFunctor::PostnikovSection(5), "singleton among finite complexes {S^5}"),
        (
            "S^2xS^5",
            GenusFunctor::PostnikovSection(2),
            "not singleton: CP^2xS^3 also belongs to the genus of S^2xS^5",
        ),
    ];
    for (tag, functor, text) in cases {
        let x: FiniteComplex = tag.parse().map_err(|e: locgenus::Error| e.to_string())?;
        let v = finite_complex_genus_verdict(x, functor).to_string();
        ensure(v == text, || format!("{tag}: {v}"))?;
    }
    Ok(())
}

fn cli_conformance() -> Check {
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_locgenus")).args(args).output().unwrap();
        String::from_utf8(out.stdout).unwrap()
    };
    ensure(run(&["padic", "class", "2", "12"]) == "2\n", || "padic class".into())?;
    ensure(run(&["type", "similar", "{default:0}", "{default:0,2:3}"]) == "true\n", || "type similar".into())?;
    let listing = run(&["genus", "postnikov", "enumerate", "--dim", "3", "--primes", "3", "--max", "1"]);
    let lines: Vec<_> = listing.lines().collect();
    ensure(lines.len() == 10 && lines[9] == "count: 9", || format!("enumerate: {listing:?}"))?;
    let mut r = rng(10);
    for _ in 0..1000 {
        let d = PostnikovGenusDescriptor::new(5, nplus_sequence(&mut r)).unwrap();
        let text = print_descriptor(&d);
        let back = parse_descriptor(&text, 5).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == d && print_descriptor(&back) == text, || format!("roundtrip {text}"))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("kernel roundtrip", kernel_roundtrip),
        ("similarity laws", similarity_laws),
        ("rational genus invariant", rational_genus_invariant),
        ("connectivity correspondence", connectivity_correspondence),
        ("p-adic class bijection", nplus_bijection),
        ("fingerprint inversion", fingerprint_inversion),
        ("truncated cardinality", truncated_cardinality),
        ("complex projective rule", complex_projective_rule),
        ("genus verdicts", verdicts),
        ("cli conformance", cli_conformance),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
