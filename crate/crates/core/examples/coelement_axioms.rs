use hopfring::grading::{laurent_hopf, sign_coelement, Bicharacter};
use hopfring::laws::{check_coelement, comodule_braiding, Coelement};
use hopfring::diffhopf::generator_comodule;
use num_bigint::BigInt;

fn main() -> hopfring::Result<()> {
    for kappa in [-1, 1] {
        let c = sign_coelement(&Bicharacter::single(kappa));
        let r = check_coelement(&c, 8)?;
        println!("κ = {kappa:+}: {}", if r.all_pass() { "all three axioms hold" } else { "fails" });
    }

    // (-1)^{i+j} is symmetric but not bimultiplicative.
    let z = laurent_hopf(1);
    let bad = Coelement::new(&z, |a, b| {
        let i = a.atom_index("x").unwrap()[0] + b.atom_index("x").unwrap()[0];
        BigInt::from(if i.rem_euclid(2) == 0 { 1 } else { -1 })
    });
    for f in check_coelement(&bad, 3)?.failures() {
        println!("perturbed {}: {}", f.law, f.verdict.counterexample().unwrap());
    }

    let c = sign_coelement(&Bicharacter::single(-1));
    let d1 = generator_comodule(&[1]);
    let sigma = comodule_braiding(&d1, &d1, &c)?;
    let dd = d1.carrier().basis().unwrap()[0].clone();
    let l = hopfring::linalg::Label::pair(&dd, &dd);
    println!("σ(d⊗d) for d in degree 1 = {}", sigma.apply(&l));
    Ok(())
}
