// Conjugacy classes of GL_N(F_q) and SL_N(F_q) by enumeration.

use std::error::Error;

use macvogan::oracle::{conj_class_count, FiniteField, GroupKind, MatrixGroupSpec, DEFAULT_BUDGET};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f9 = FiniteField::new(9)?;
    println!("F_9 = F_3[x]/({})", f9.modulus_string());
    for (n, q) in [(2, 3), (2, 4), (2, 5), (3, 2)] {
        for kind in [GroupKind::Gl, GroupKind::Sl] {
            let c = conj_class_count(MatrixGroupSpec::new(kind, n, q), DEFAULT_BUDGET)?;
            println!("{}: order {}, {} classes", c.spec, c.group_order, c.classes);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
