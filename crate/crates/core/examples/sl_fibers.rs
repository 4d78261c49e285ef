// Macdonald–Vogan fibers: irreducibles of SL_N(F_q) grouped over twist
// classes, and a tame parameter read from JSON.

use std::error::Error;

use macvogan::cuspidal::FieldParams;
use macvogan::sl::{check_finalcomp, hp_sl_packet, mv_fiber, sl_canonicalize, sl_census};
use macvogan::tame::{TameParameter, TameParameterJson};

const PARAM: &str = r#"{"N": 4, "q": 3, "blocks": [
    {"d": 2, "orbit": 2, "u": "1/3", "length": 1},
    {"d": 1, "orbit": 0, "u": "0", "length": 2}
]}"#;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (q, n) in [(3, 2), (5, 2), (3, 3)] {
        println!(
            "SL_{n}(F_{q}) has {} irreducibles",
            sl_census(FieldParams::new(q)?, n)?
        );
    }
    let doc: TameParameterJson = serde_json::from_str(PARAM)?;
    let p = TameParameter::from_json(&doc)?;
    let c = sl_canonicalize(&p);
    let class = hp_sl_packet(&c);
    println!("parameter {p}");
    println!("canonical {}", c.canonical);
    println!(
        "MV class {} with fiber of size {}",
        class.representative,
        mv_fiber(&class).len()
    );
    println!("member heads partition the fiber: {}", check_finalcomp(&c));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
