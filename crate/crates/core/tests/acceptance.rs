//! Acceptance run: one PASS/FAIL line per criterion, exact integer verdicts.

use std::time::{Duration, Instant};

use hopfring::chains::{
    chain_symmetry, check_triangle_identities, comonad_comparison, curry, random_chain_map,
    random_complex, random_graded_map, second_differential, tensor_chains, uncurry, Bicomplex,
    ChainComplex,
};
use hopfring::diffhopf::{
    build_differential_hopf, check_differential_carrier, cyclic_tensor, generator, generator_comodule,
    GradedCarrier, Summand,
};
use hopfring::grading::{laurent_hopf, monomial, sign_coelement, Bicharacter};
use hopfring::laws::{check_bialgebra_laws, check_coelement, Braiding, Coelement, Comodule};
use hopfring::linalg::{Label, LinMap, Space, Vector};
use hopfring::pareigis::{chain_to_comodule, comodule_to_chain, identify_semidirect, pareigis_ring};
use hopfring::semidirect::{
    comparison_f, comparison_f_inverse, same_h_comodule, semidirect_product, HComodule,
};
use hopfring::Error;
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hopf_suite() -> Outcome {
    let start = Instant::now();
    let mut laws = 0;
    for s in [-1, 1] {
        let p = pareigis_ring(s).map_err(|e| e.to_string())?;
        let r = check_bialgebra_laws(&p, &Braiding::symmetric(), 8).map_err(|e| e.to_string())?;
        ensure(r.results.len() == 12, || format!("s={s}: expected 12 laws"))?;
        ensure(r.all_pass(), || format!("s={s}: {r}"))?;
        laws += r.results.len();
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), || format!("took {t:?}"))?;
    Ok(format!("{laws} laws at K=8 in {} ms", t.as_millis()))
}

fn coelement_axioms() -> Outcome {
    let z = laurent_hopf(1);
    for kappa in [-1i8, 1] {
        let r = check_coelement(&sign_coelement(&Bicharacter::single(kappa)), 8)
            .map_err(|e| e.to_string())?;
        ensure(r.all_pass(), || format!("κ={kappa}: {r}"))?;
    }
    let bad = Coelement::new(&z, |a, b| {
        let (i, j) = (a.atom_index("x").unwrap()[0], b.atom_index("x").unwrap()[0]);
        BigInt::from(if (i + j).rem_euclid(2) == 0 { 1 } else { -1 })
    });
    let r = check_coelement(&bad, 8).map_err(|e| e.to_string())?;
    let ce = r
        .failures()
        .find_map(|f| f.verdict.counterexample().cloned())
        .ok_or("perturbed γ was accepted")?;
    Ok(format!("both κ pass; perturbed γ fails at {ce}"))
}

fn identification() -> Outcome {
    for s in [-1, 1] {
        let r = identify_semidirect(s, 6).map_err(|e| e.to_string())?;
        ensure(r.results.len() == 5 && r.all_pass(), || format!("s={s}: {r}"))?;
    }
    Ok("five maps Equal for s = ±1 at K=6".into())
}

fn semidirect_theorem() -> Outcome {
    let c = sign_coelement(&Bicharacter::single(-1));
    for s in [-3, -1, 1, 3] {
        let hb = build_differential_hopf(&generator_comodule(&[s]), &c).map_err(|e| e.to_string())?;
        let p = semidirect_product(&hb, 6).map_err(|e| e.to_string())?;
        let r = check_bialgebra_laws(p.ring(), &Braiding::symmetric(), 6).map_err(|e| e.to_string())?;
        ensure(r.all_pass(), || format!("s={s}: {r}"))?;
        ensure(r.get("left-antipode").is_some() && r.get("right-antipode").is_some(), || {
            "antipode missing".into()
        })?;
    }
    Ok("D = ℤ@s for s ∈ {-3, -1, 1, 3}".into())
}

// The comodule over (I⊕D)⋊ℤ of a complex, written out directly.
fn q_comodule(x: &ChainComplex, ring: &hopfring::laws::Bimonoid, s: i64) -> Comodule {
    let xc = x.clone();
    let one = Label::right(Label::Unit);
    let d = Label::left(generator());
    let beta = LinMap::new(&x.space(), &Space::pair(ring.carrier(), &x.space()), move |l| {
        let n = xc.degree_of(l).unwrap();
        let head = Label::tensor([&one, &monomial(&[n]), l]);
        let mut v = Vector::basis(head);
        for (t, c) in &xc.differential(l) {
            v.add_term(Label::tensor([&d, &monomial(&[n - s]), t]), c.clone());
        }
        v
    });
    Comodule::new_unchecked(ring, &x.space(), beta).unwrap()
}

fn same_coaction(a: &Comodule, b: &Comodule) -> bool {
    a.carrier().basis().unwrap().iter().all(|l| a.coact(l) == b.coact(l))
}

fn equivalence_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for t in 0..100 {
        let s = if t % 2 == 0 { -1 } else { 1 };
        let len = 1 + t % 7;
        let x = random_complex(&mut rng, -s, -3, len, 4, 0);
        let b = chain_to_comodule(&x, s).map_err(|e| e.to_string())?;
        let y = comodule_to_chain(&b).map_err(|e| e.to_string())?;
        ensure(y == x, || format!("trial {t}: chain round trip"))?;
        let b2 = chain_to_comodule(&y, s).map_err(|e| e.to_string())?;
        ensure(same_coaction(&b, &b2), || format!("trial {t}: comodule round trip"))?;
    }
    let c = sign_coelement(&Bicharacter::single(-1));
    for t in 0..50 {
        let s = if t % 2 == 0 { -1 } else { 1 };
        let hb = build_differential_hopf(&generator_comodule(&[s]), &c).unwrap();
        let p = semidirect_product(&hb, 1).unwrap();
        let x = random_complex(&mut rng, -s, -1, 3, 2, 1);
        let y = random_complex(&mut rng, -s, 0, 2, 2, 1);
        let (bx, by) = (
            HComodule::from_chain(&hb, &x).map_err(|e| e.to_string())?,
            HComodule::from_chain(&hb, &y).map_err(|e| e.to_string())?,
        );
        let fx = comparison_f(&bx, &p, 0).map_err(|e| e.to_string())?;
        let back = comparison_f_inverse(&fx, &p, 0).map_err(|e| e.to_string())?;
        ensure(same_h_comodule(&back, &bx, 0).unwrap(), || format!("sample {t}: F⁻¹F ≠ 1"))?;
        let direct = q_comodule(&x, p.ring(), s);
        let again = comparison_f(&comparison_f_inverse(&direct, &p, 0).map_err(|e| e.to_string())?, &p, 0)
            .map_err(|e| e.to_string())?;
        ensure(same_coaction(&again, &direct), || format!("sample {t}: FF⁻¹ ≠ 1"))?;
        ensure(same_coaction(&fx, &direct), || format!("sample {t}: F differs from the chain coaction"))?;
        let fxy = comparison_f(&HComodule::tensor(&bx, &by).map_err(|e| e.to_string())?, &p, 0)
            .map_err(|e| e.to_string())?;
        let fy = comparison_f(&by, &p, 0).map_err(|e| e.to_string())?;
        let prod = Comodule::tensor(&fx, &fy).map_err(|e| e.to_string())?;
        ensure(same_coaction(&fxy, &prod), || format!("sample {t}: F not monoidal"))?;
        let xy = tensor_chains(&x, &y).unwrap();
        ensure(same_coaction(&fxy, &q_comodule(&xy, p.ring(), s)), || {
            format!("sample {t}: F(B⊗C) is not the tensor complex")
        })?;
    }
    Ok("100 complexes, 50 comodule samples".into())
}

// Brute force: D⊗D = ⊕ ℤ/gcd(n_i, n_j) e_ij and σ(e_ij) = γ(g_j, g_i) e_ji.
fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn zero_mod(c: i64, m: u64) -> bool {
    if m == 0 {
        c == 0
    } else {
        c.rem_euclid(m as i64) == 0
    }
}

fn sigma_is_minus_one(summands: &[Summand], kappa: i64) -> bool {
    let gamma = |g: &[i64], h: &[i64]| if kappa == -1 && (g[0] * h[0]).rem_euclid(2) == 1 { -1 } else { 1 };
    for (i, x) in summands.iter().enumerate() {
        for (j, y) in summands.iter().enumerate() {
            let m = gcd(x.order, y.order);
            let g = gamma(&y.degree, &x.degree);
            if i == j {
                if !zero_mod(g + 1, m) {
                    return false;
                }
            } else if !zero_mod(1, m) || !zero_mod(g, m) {
                return false;
            }
        }
    }
    true
}

fn carrier_decision() -> Outcome {
    let mut atoms = Vec::new();
    for deg in -2..=2 {
        for order in [0u64, 2, 3, 4] {
            atoms.push(Summand { degree: vec![deg], order });
        }
    }
    let mut carriers: Vec<Vec<Summand>> = vec![vec![]];
    for i in 0..atoms.len() {
        carriers.push(vec![atoms[i].clone()]);
        for j in i..atoms.len() {
            carriers.push(vec![atoms[i].clone(), atoms[j].clone()]);
            for k in j..atoms.len() {
                carriers.push(vec![atoms[i].clone(), atoms[j].clone(), atoms[k].clone()]);
            }
        }
    }
    let mut checked = 0;
    for kappa in [-1i64, 1] {
        let b = Bicharacter::single(kappa as i8);
        for c in &carriers {
            let d = GradedCarrier::new(1, c.clone()).unwrap();
            let v = check_differential_carrier(&d, &b).map_err(|e| e.to_string())?;
            ensure(v.accepted == sigma_is_minus_one(c, kappa), || {
                format!("κ={kappa}, carrier {c:?}: decision {}", v.accepted)
            })?;
            checked += 1;
        }
    }
    let b = Bicharacter::single(-1);
    for s in -5..=5 {
        let d = GradedCarrier::new(1, vec![Summand { degree: vec![s], order: 0 }]).unwrap();
        let ok = check_differential_carrier(&d, &b).unwrap().accepted;
        ensure(ok == (s % 2 != 0), || format!("ℤ@{s}"))?;
    }
    for p in [2u64, 3, 5, 7] {
        for q in [2u64, 3, 5, 7] {
            for n in 1..=3u32 {
                for m in 1..=3u32 {
                    let want = if p == q { p.pow(n.min(m)) } else { 1 };
                    ensure(cyclic_tensor(p.pow(n), q.pow(m)) == want, || {
                        format!("{p}^{n} ⊗ {q}^{m}")
                    })?;
                }
            }
        }
        ensure(cyclic_tensor(0, p) == p && cyclic_tensor(0, 0) == 0, || "ℤ rows".into())?;
    }
    Ok(format!("{checked} carriers agree with the oracle"))
}

fn dgab_structure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for t in 0..30 {
        let a = random_complex(&mut rng, -1, -2, 5, 3, 1);
        let b = random_complex(&mut rng, -1, -1, 4, 3, 1);
        let ab = tensor_chains(&a, &b).map_err(|e| e.to_string())?;
        ensure(ab.check_d_squared(), || format!("trial {t}: d² ≠ 0"))?;
        let s1 = chain_symmetry(&a, &b).map_err(|e| e.to_string())?;
        let s2 = chain_symmetry(&b, &a).map_err(|e| e.to_string())?;
        ensure(s1.then(&s2).unwrap().same_as(&ab.identity()), || format!("trial {t}: σ² ≠ 1"))?;
    }
    for t in 0..100 {
        let a = random_complex(&mut rng, -1, -1, 3, 2, 1);
        let b = random_complex(&mut rng, -1, 0, 2, 2, 1);
        let c = random_complex(&mut rng, -1, -1, 4, 2, 0);
        let f = random_chain_map(&mut rng, &tensor_chains(&a, &b).unwrap(), &c, false);
        let g = curry(&f, &a, &b).map_err(|e| e.to_string())?;
        ensure(uncurry(&g, &b, &c).map_err(|e| e.to_string())?.same_as(&f), || {
            format!("map {t}: uncurry∘curry ≠ 1")
        })?;
        ensure(curry(&uncurry(&g, &b, &c).unwrap(), &a, &b).unwrap().same_as(&g), || {
            format!("map {t}: curry∘uncurry ≠ 1")
        })?;
    }
    for t in 0..20 {
        let m = random_complex(&mut rng, -1, -2, 4, 3, 0);
        let x = random_complex(&mut rng, -1, -2, 4, 3, 1);
        let r = check_triangle_identities(&m, &x).map_err(|e| e.to_string())?;
        ensure(r.all_pass(), || format!("trial {t}: {r}"))?;
    }
    for t in 0..100 {
        let x = random_complex(&mut rng, -1, -2, 1 + t % 5, 3, 0);
        let y = random_complex(&mut rng, -1, -2, 5, 2, 0);
        let f = random_graded_map(&mut rng, &x, &y);
        let r = comonad_comparison(&x, &[f]).map_err(|e| e.to_string())?;
        ensure(r.all_pass(), || format!("complex {t}: {r}"))?;
    }
    Ok("σ² = 1, d² = 0, 100 curry pairs, triangles, 100 comonad comparisons".into())
}

fn bicomplex_squares() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut emitted = 0;
    for (kappa, s) in [(-1, -1), (-1, 1), (1, -1), (1, 1)] {
        let shift = if kappa == 1 { s } else { 0 };
        for t in 0..25 {
            let x = random_complex(&mut rng, -1, -1, 3, 2, 1);
            let y = random_complex(&mut rng, -1, 0, 3, 2, 1);
            let good = Bicomplex::product(&x, &y, shift, kappa == 1).unwrap();
            let out = second_differential(&good, kappa, s)
                .map_err(|e| format!("κ={kappa}, s={s}, trial {t}: {e}"))?;
            ensure(out.report.all_pass() && out.comodule.validate(0).unwrap().all_pass(), || {
                format!("κ={kappa}, s={s}, trial {t}: illegal coaction")
            })?;
            emitted += 1;
            let bad = Bicomplex::product(&x, &y, shift, kappa != 1).unwrap();
            ensure(
                matches!(second_differential(&bad, kappa, s), Err(Error::SquareViolation { .. })),
                || format!("κ={kappa}, s={s}, trial {t}: wrong square accepted"),
            )?;
        }
    }
    Ok(format!("{emitted} legal coactions emitted, every wrong square rejected"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("hopf suite", hopf_suite),
        ("coelement axioms", coelement_axioms),
        ("identification", identification),
        ("semidirect theorem", semidirect_theorem),
        ("equivalence round trip", equivalence_round_trip),
        ("carrier decision", carrier_decision),
        ("dgab structure", dgab_structure),
        ("bicomplex squares", bicomplex_squares),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail} ({} ms)", i + 1, start.elapsed().as_millis()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
