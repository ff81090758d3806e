//! Graded abelian groups as comodules over the Laurent ring ℤ[ℤ^r].

use hopfring::grading::{
    comodule_to_graded_projections, graded_to_comodule, laurent_hopf, monomial, Component,
    GradedModule,
};
use hopfring::laws::{check_bialgebra_laws, Braiding};

fn main() -> hopfring::Result<()> {
    let z2 = laurent_hopf(2);
    let report = check_bialgebra_laws(&z2, &Braiding::symmetric(), 2)?;
    println!("ℤ[ℤ²] laws on window 2: all pass = {}", report.all_pass());
    println!("Δ(x^(1,-2)) = {}", z2.comultiply(&monomial(&[1, -2])));

    let m = GradedModule::new(
        2,
        vec![
            Component { degree: vec![0, 1], rank: 2 },
            Component { degree: vec![-1, 3], rank: 1 },
        ],
    )?;
    let x = graded_to_comodule(&m);
    for l in x.carrier().basis().unwrap() {
        println!("β({l}) = {}", x.coact(&l));
    }
    for (g, p) in comodule_to_graded_projections(&x)? {
        let image: Vec<String> = x
            .carrier()
            .basis()
            .unwrap()
            .iter()
            .map(|l| p.apply(l).to_string())
            .collect();
        println!("p{g:?}: [{}]", image.join(", "));
    }
    Ok(())
}
