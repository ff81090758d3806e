use hopfring::diffhopf::{check_differential_carrier, cyclic_tensor, GradedCarrier, Summand};
use hopfring::grading::Bicharacter;

fn carrier(items: &[(i64, u64)]) -> GradedCarrier {
    let s = items
        .iter()
        .map(|&(g, order)| Summand { degree: vec![g], order })
        .collect();
    GradedCarrier::new(1, s).unwrap()
}

fn main() -> hopfring::Result<()> {
    println!("ℤ/4⊗ℤ/8 = ℤ/{}", cyclic_tensor(4, 8));
    println!("ℤ/9⊗ℤ/4 = ℤ/{}", cyclic_tensor(9, 4));
    println!("ℤ⊗ℤ/5 = ℤ/{}", cyclic_tensor(0, 5));

    let b = Bicharacter::single(-1);
    let cases: [&[(i64, u64)]; 5] = [
        &[(1, 0)],
        &[(0, 0)],
        &[(0, 2)],
        &[(1, 2), (3, 3)],
        &[(1, 0), (1, 0)],
    ];
    for items in cases {
        let d = carrier(items);
        let v = check_differential_carrier(&d, &b)?;
        let names: Vec<String> = d.summands().iter().map(|s| s.to_string()).collect();
        println!("{{{}}}: {}", names.join(", "), if v.accepted { "accept" } else { "reject" });
        for why in v.diagnostics {
            println!("    {why}");
        }
    }
    Ok(())
}
