//! Tensor, symmetry, internal hom and the adjoint triple L ⊣ U ⊣ R on chains.

use std::collections::BTreeMap;

use hopfring::chains::{
    chain_symmetry, check_triangle_identities, comonad_comparison, evaluation, internal_hom,
    left_adjoint, random_complex, random_graded_map, tensor_chains, ChainComplex,
};
use hopfring::linalg::{IntMatrix, Label};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hopfring::Result<()> {
    let two = ChainComplex::from_ranks(
        -1,
        &BTreeMap::from([(0, 1), (1, 1)]),
        BTreeMap::from([(1, IntMatrix::from_rows(&[vec![2]], 1))]),
    )?;
    let t = tensor_chains(&two, &two)?;
    for l in t.labels() {
        println!("d({l}) = {}", t.differential(l));
    }
    let s = chain_symmetry(&two, &two)?;
    let top = t.basis(2)[0].clone();
    println!("σ({top}) = {}", s.apply(&top));

    let h = internal_hom(&two, &two)?;
    println!(
        "[B, B] ranks: {:?}",
        h.degrees().iter().map(|&n| (n, h.rank(n))).collect::<Vec<_>>()
    );
    evaluation(&two, &two)?;
    println!("evaluation [B, B]⊗B → B is a chain map");

    let z = ChainComplex::new(-1, BTreeMap::from([(0, vec![Label::atom("z", &[])])]), BTreeMap::new())?;
    let l = left_adjoint(&z);
    println!("L(ℤ@0): ranks {:?}, d = {}", l.degrees(), l.d(0).get(0, 0));
    println!("{}", check_triangle_identities(&z, &two)?);

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let x = random_complex(&mut rng, -1, -2, 5, 3, 1);
    let y = random_complex(&mut rng, -1, -2, 5, 2, 0);
    let f = random_graded_map(&mut rng, &x, &y);
    println!("U R X ≅ (I ⊕ D)⊗U X:\n{}", comonad_comparison(&x, &[f])?);
    Ok(())
}
