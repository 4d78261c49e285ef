// The two parameters showing that the map between component groups is
// neither always onto nor always injective.

use std::error::Error;

use macvogan::cuspidal::FieldParams;
use macvogan::sl::{hp_sl_member, l_packet, sl_canonicalize};
use macvogan::tame::{make_example1, make_example2, TameParameter};

fn report(label: &str, p: &TameParameter) {
    let c = sl_canonicalize(p);
    let h = p.iota_hat();
    println!("{label}: {p}");
    println!(
        "  |A| = {}, inertial group order {}, iota_hat injective={} surjective={}",
        p.component_group_l().order(),
        p.component_group_inertial().order(),
        h.is_injective(),
        h.is_surjective()
    );
    for member in l_packet(&c) {
        let heads = hp_sl_member(&c, &member.packet_index).expect("packet character");
        println!(
            "  psi {:?} -> {} head label(s)",
            member.packet_index,
            heads.len()
        );
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    report(
        "cyclic Frobenius, N = 3, q = 4",
        &make_example1(FieldParams::new(4)?, 3)?,
    );
    report(
        "ramified regular, N = 4, q = 5, e = 4",
        &make_example2(FieldParams::new(5)?, 4, 4)?,
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
