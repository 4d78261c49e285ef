// The head of parahoric restriction of a depth-zero representation read
// from its multisegment, its lower set in dominance, and its behaviour
// under twisting.

use std::error::Error;

use macvogan::cuspidal::{CuspidalDatum, FieldParams, ResidueCharacter};
use macvogan::zelevinsky::{constituent_lower_set, hp_gl, Multisegment, Segment};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = FieldParams::new(5)?;
    let triv = CuspidalDatum::trivial(field);
    let quad = CuspidalDatum::new(field, 1, 2)?;
    let ms = Multisegment::new(
        field,
        [
            Segment {
                cuspidal: triv,
                length: 1,
            },
            Segment {
                cuspidal: triv,
                length: 1,
            },
            Segment {
                cuspidal: quad,
                length: 2,
            },
        ],
    )?;
    let head = hp_gl(&ms);
    println!("multisegment {ms}");
    println!("head of restriction {head}");
    for lam in constituent_lower_set(&head) {
        println!("  below: {lam}");
    }
    let chi = ResidueCharacter::new(field, 1);
    assert_eq!(hp_gl(&ms.twist(chi)), head.twist(chi));
    println!("after twisting by chi_1: {}", hp_gl(&ms.twist(chi)));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
