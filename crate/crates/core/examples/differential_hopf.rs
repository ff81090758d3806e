//! H = D ⊕ I built over a differential generator D = ℤ@s.

use hopfring::diffhopf::{build_differential_hopf, build_differential_hopf_unchecked, generator, generator_comodule};
use hopfring::grading::{sign_coelement, Bicharacter};
use hopfring::laws::{check_bialgebra_laws, check_distributive_law, distributive_law_tau};
use hopfring::linalg::Label;

fn main() -> hopfring::Result<()> {
    let c = sign_coelement(&Bicharacter::single(-1));
    let hb = build_differential_hopf(&generator_comodule(&[1]), &c)?;
    let h = hb.hopf();
    let d = Label::left(generator());
    println!("Δ(d) = {}", h.comultiply(&d));
    println!("S(d) = {}", h.antipode().unwrap().apply(&d));
    println!("d·d = {}", h.multiply(&d, &d));
    let r = hb.validate(3)?;
    println!("bimonoid in comodules: {}", r.all_pass());

    let tau = distributive_law_tau(hb.comodule());
    let r = check_distributive_law(&tau, hb.comodule(), Some(h), 5)?;
    println!("τ_H axioms: {}", r.all_pass());

    // An even generator braids with itself by +1, so the interchange law breaks.
    match build_differential_hopf(&generator_comodule(&[2]), &c) {
        Err(e) => println!("ℤ@2: {e}"),
        Ok(_) => unreachable!(),
    }
    let even = build_differential_hopf_unchecked(&generator_comodule(&[2]), &c)?;
    let r = check_bialgebra_laws(even.hopf(), &even.braiding(), 3)?;
    for f in r.failures() {
        println!("ℤ@2 {}: {}", f.law, f.verdict.counterexample().unwrap());
    }
    Ok(())
}
