// Subgroups of products of cyclic groups, their duals, and a
// homomorphism with its kernel, image and dual.

use std::error::Error;

use macvogan::exact_groups::{FinAbGroup, GroupHom};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // <(2, 3), (0, 6)> inside Z/4 x Z/12
    let g = FinAbGroup::generated_by(&[4, 12], &[vec![2, 3], vec![0, 6]])?;
    println!(
        "G = {g}, order {}, invariant factors {:?}",
        g.order(),
        g.invariant_factors()
    );

    let dual = g.dual();
    println!("dual shape {:?}", dual.invariant_factors());
    for chi in dual.elements() {
        let values: Vec<String> = g
            .elements()
            .map(|x| g.pair(&chi, &x).map(|p| p.to_string()).unwrap_or_default())
            .collect();
        println!("  chi {chi:?}: {}", values.join(" "));
    }

    let z12 = FinAbGroup::whole(&[12])?;
    let f = GroupHom::from_fn(g.clone(), z12, |x| vec![(x[1] * 2) % 12])?;
    let (ker, im) = f.kernel_image();
    println!(
        "f: G -> Z/12, kernel order {}, image order {}",
        ker.order(),
        im.order()
    );
    let fd = f.dual();
    println!(
        "dual map injective={} surjective={}",
        fd.is_injective(),
        fd.is_surjective()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
