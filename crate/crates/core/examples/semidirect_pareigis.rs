//! The semidirect product (I ⊕ D) ⋊ ℤ[x, x⁻¹] and the Pareigis rings.

use hopfring::diffhopf::{build_differential_hopf, generator, generator_comodule};
use hopfring::grading::{monomial, sign_coelement, Bicharacter};
use hopfring::linalg::Label;
use hopfring::pareigis::{identify_against, identify_semidirect, normalize_word, pareigis_ring, pm, Word};
use hopfring::semidirect::semidirect_product;

fn main() -> hopfring::Result<()> {
    let c = sign_coelement(&Bicharacter::single(-1));
    let hb = build_differential_hopf(&generator_comodule(&[-1]), &c)?;
    let q = semidirect_product(&hb, 3)?;
    let ring = q.ring();
    let psi = Label::pair(&Label::left(generator()), &monomial(&[0]));
    let xi = Label::pair(&Label::right(Label::Unit), &monomial(&[1]));
    println!("ξ·ψ = {}", ring.multiply(&xi, &psi));
    println!("Δ(ψ) = {}", ring.comultiply(&psi));
    println!("S(ψ) = {}", ring.antipode().unwrap().apply(&psi));

    let word: Word = "ξψξ⁻¹".parse()?;
    println!("{word} = {}", normalize_word(&word));
    let p = pareigis_ring(-1)?;
    println!("in P: Δ(ψξ) = {}", p.comultiply(&pm(1, 1)));

    for s in [-1, 1] {
        println!("s = {s:+}:\n{}", identify_semidirect(s, 6)?);
    }
    let cross = identify_against(&pareigis_ring(1)?, -1, 3)?;
    println!("P₊ against s = -1 data:\n{cross}");
    Ok(())
}
