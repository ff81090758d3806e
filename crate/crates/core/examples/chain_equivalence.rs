use std::collections::BTreeMap;

use hopfring::chains::{random_chain_map, random_complex, ChainComplex, ChainComplexJson};
use hopfring::pareigis::{chain_map_to_morphism, chain_to_comodule, comodule_to_chain, ComoduleJson};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hopfring::Result<()> {
    let json = r#"{"window": [0, 1], "ranks": {"0": 1, "1": 1}, "differentials": {"1": [[2]]}}"#;
    let x: ChainComplex = serde_json::from_str::<ChainComplexJson>(json)?.build()?;
    let b = chain_to_comodule(&x, 1)?;
    println!("{}", serde_json::to_string_pretty(&ComoduleJson::from_comodule(&b)?)?);
    println!("back to chains: {}", comodule_to_chain(&b)? == x);

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut ok = 0;
    for _ in 0..100 {
        let x = random_complex(&mut rng, -1, -3, 7, 4, 0);
        if comodule_to_chain(&chain_to_comodule(&x, 1)?)? == x {
            ok += 1;
        }
    }
    println!("{ok}/100 random complexes survive the round trip");

    let x = random_complex(&mut rng, 1, 0, 4, 3, 1);
    let f = random_chain_map(&mut rng, &x, &x, true);
    let (_, _, g) = chain_map_to_morphism(&f, -1)?;
    let ranks: BTreeMap<i64, usize> = x.degrees().into_iter().map(|n| (n, x.rank(n))).collect();
    println!("cochain map on ranks {ranks:?} is a P-comodule morphism on {}", g.dom());
    Ok(())
}
