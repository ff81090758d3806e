use hopfring::chains::{random_complex, second_differential, Bicomplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hopfring::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = random_complex(&mut rng, -1, -1, 3, 2, 1);
    let y = random_complex(&mut rng, -1, 0, 3, 2, 1);
    for (kappa, s) in [(-1, 1), (1, 1), (1, -1)] {
        let shift = if kappa == 1 { s } else { 0 };
        // κ = -1 wants commuting squares, κ = +1 anticommuting ones.
        let good = Bicomplex::product(&x, &y, shift, kappa == 1)?;
        let out = second_differential(&good, kappa, s)?;
        println!("κ = {kappa:+}, s = {s:+}: accepted, {} legality checks pass", out.report.results.len());
        let bad = Bicomplex::product(&x, &y, shift, kappa != 1)?;
        match second_differential(&bad, kappa, s) {
            Err(e) => println!("    wrong signs: {e}"),
            Ok(_) => println!("    wrong signs accepted"),
        }
    }
    Ok(())
}
