// Cuspidal data of GL_d(F_q): Frobenius orbits of regular characters,
// checked against the necklace count, and the effect of a twist.

use std::error::Error;

use macvogan::cuspidal::{
    cuspidal_count, enumerate_cuspidals, necklace_count, FieldParams, ResidueCharacter,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for q in [2, 3, 4, 5] {
        let field = FieldParams::new(q)?;
        let counts: Vec<String> = (1..=4)
            .map(|d| {
                let n = cuspidal_count(field, d).expect("small degree");
                assert_eq!(n, necklace_count(field, d).expect("small degree"));
                n.to_string()
            })
            .collect();
        println!("q={q}: cuspidals in degrees 1..4: {}", counts.join(", "));
    }

    let field = FieldParams::new(3)?;
    let chi = ResidueCharacter::new(field, 1);
    for tau in enumerate_cuspidals(field, 2)? {
        println!(
            "  {tau} orbit {:?} -> twisted {}",
            tau.orbit(),
            tau.twist(chi)
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
