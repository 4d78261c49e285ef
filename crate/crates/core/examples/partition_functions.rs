// Partition-valued functions of degree N label the irreducibles of
// GL_N(F_q); twisting by characters of F_q^* groups them into orbits.

use std::error::Error;

use macvogan::cuspidal::FieldParams;
use macvogan::partition::{enumerate_degree, orbits_and_stabilizers};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = FieldParams::new(3)?;
    let fns = enumerate_degree(field, 2)?;
    println!("GL_2(F_3) has {} irreducibles:", fns.len());
    for m in &fns {
        println!("  {m}");
    }
    println!("twist orbits:");
    for o in orbits_and_stabilizers(field, 2)? {
        println!(
            "  {} orbit length {} stabilizer order {}",
            o.representative,
            o.orbit_len,
            o.stabilizer.order()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
