use std::fmt;

use crate::error::{Error, Result};
use crate::oracle::field::FiniteField;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Element budget from `MACVOGAN_BUDGET`, falling back to the default.
pub fn budget_from_env() -> Result<u64> {
    match std::env::var("MACVOGAN_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("MACVOGAN_BUDGET is not an integer: {s:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Gl,
    Sl,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Gl => "GL",
            GroupKind::Sl => "SL",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatrixGroupSpec {
    pub kind: GroupKind,
    pub n: u32,
    pub q: u64,
}

impl fmt::Display for MatrixGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}(F_{})", self.kind, self.n, self.q)
    }
}

impl MatrixGroupSpec {
    pub fn new(kind: GroupKind, n: u32, q: u64) -> Self {
        MatrixGroupSpec { kind, n, q }
    }

    /// `prod (q^N - q^i)`, divided by `q - 1` for `SL`; `None` on overflow.
    pub fn closed_form_order(&self) -> Option<u128> {
        let q = self.q as u128;
        let qn = q.checked_pow(self.n)?;
        let mut order: u128 = 1;
        for i in 0..self.n {
            order = order.checked_mul(qn - q.checked_pow(i)?)?;
        }
        Some(match self.kind {
            GroupKind::Gl => order,
            GroupKind::Sl => order / (q - 1),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCount {
    pub spec: MatrixGroupSpec,
    pub group_order: u64,
    pub classes: u64,
    /// Sizes of the conjugacy classes, in discovery order.
    pub class_sizes: Vec<u64>,
    pub field_polynomial: String,
}

// Square matrices over a table field, row-major.
struct MatOps<'a> {
    f: &'a FiniteField,
    n: usize,
}

impl MatOps<'_> {
    fn encode(&self, m: &[u8]) -> usize {
        let q = self.f.order();
        m.iter().rev().fold(0, |acc, &x| acc * q + x as usize)
    }

    fn decode(&self, mut code: usize, out: &mut [u8]) {
        let q = self.f.order();
        for x in out.iter_mut() {
            *x = (code % q) as u8;
            code /= q;
        }
    }

    fn mul(&self, a: &[u8], b: &[u8], out: &mut [u8]) {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u8;
                for k in 0..n {
                    s = self.f.add(s, self.f.mul(a[i * n + k], b[k * n + j]));
                }
                out[i * n + j] = s;
            }
        }
    }

    fn det(&self, m: &[u8]) -> u8 {
        let n = self.n;
        let f = self.f;
        let mut a = m.to_vec();
        let mut det = 1u8;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * n + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv);
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let t = f.mul(factor, a[col * n + j]);
                    a[r * n + j] = f.sub(a[r * n + j], t);
                }
            }
        }
        det
    }

    fn identity(&self) -> Vec<u8> {
        let mut m = vec![0u8; self.n * self.n];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        m
    }
}

/// Number of conjugacy classes, by explicit orbit partition of the
/// element set.
///
/// Elements are enumerated as all matrices with the right determinant.
/// Orbits are closed under conjugation by a small generating set
/// (elementary transvections `I + c E_ij` with `c` running over an
/// `F_p`-basis of `F_q`, plus `diag(g, 1, ..., 1)` for `GL`), and the
/// generated subgroup is checked to be the whole group before counting.
pub fn conj_class_count(spec: MatrixGroupSpec, budget: u64) -> Result<ClassCount> {
    if spec.n == 0 {
        return Err(Error::Domain("matrix size must be at least 1".into()));
    }
    let field = FiniteField::new(spec.q)?;
    let expected = spec
        .closed_form_order()
        .ok_or_else(|| Error::Capacity(format!("order of {spec} overflows")))?;
    let ambient = (spec.q as u128).checked_pow(spec.n * spec.n);
    let over = |what: &str, size: Option<u128>| {
        Error::Capacity(format!(
            "{spec}: {what} {} exceeds the element budget {budget}",
            size.map_or_else(|| "overflowing".to_string(), |s| s.to_string())
        ))
    };
    if expected > budget as u128 {
        return Err(over("group order", Some(expected)));
    }
    match ambient {
        Some(a) if a <= budget as u128 => {}
        other => return Err(over("matrix space", other)),
    }
    let ambient = ambient.expect("checked") as usize;

    let n = spec.n as usize;
    let ops = MatOps { f: &field, n };
    let nn = n * n;

    // index[code] = position in `elems` (u32::MAX if not in the group).
    let mut index = vec![u32::MAX; ambient];
    let mut elems: Vec<u8> = Vec::new();
    let mut buf = vec![0u8; nn];
    let mut count: u32 = 0;
    for (code, slot) in index.iter_mut().enumerate() {
        ops.decode(code, &mut buf);
        let d = ops.det(&buf);
        let keep = match spec.kind {
            GroupKind::Gl => d != 0,
            GroupKind::Sl => d == 1,
        };
        if keep {
            *slot = count;
            count += 1;
            elems.extend_from_slice(&buf);
        }
    }
    let order = count as u64;
    if order as u128 != expected {
        return Err(Error::Domain(format!(
            "{spec}: enumerated {order} elements, closed form gives {expected}"
        )));
    }

    let gens = generators(&field, spec.kind, n);
    let gens: Vec<(Vec<u8>, Vec<u8>)> = gens
        .into_iter()
        .map(|g| {
            let inv = inverse_by_powers(&ops, &g);
            (g, inv)
        })
        .collect();

    // The generators must generate the enumerated group.
    let mut reached = vec![false; order as usize];
    let mut stack = vec![index[ops.encode(&ops.identity())]];
    reached[stack[0] as usize] = true;
    let mut seen = 1u64;
    let mut out = vec![0u8; nn];
    while let Some(i) = stack.pop() {
        let x = &elems[i as usize * nn..(i as usize + 1) * nn];
        for (g, _) in &gens {
            ops.mul(x, g, &mut out);
            let j = index[ops.encode(&out)];
            if !reached[j as usize] {
                reached[j as usize] = true;
                seen += 1;
                stack.push(j);
            }
        }
    }
    if seen != order {
        return Err(Error::Domain(format!(
            "{spec}: generating set reaches {seen} of {order} elements"
        )));
    }

    let mut class_of = vec![u32::MAX; order as usize];
    let mut class_sizes = Vec::new();
    let mut tmp = vec![0u8; nn];
    for start in 0..order as u32 {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let id = class_sizes.len() as u32;
        class_of[start as usize] = id;
        let mut size = 1u64;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let x = &elems[i as usize * nn..(i as usize + 1) * nn];
            for (g, ginv) in &gens {
                ops.mul(g, x, &mut tmp);
                ops.mul(&tmp, ginv, &mut out);
                let j = index[ops.encode(&out)];
                if class_of[j as usize] == u32::MAX {
                    class_of[j as usize] = id;
                    size += 1;
                    stack.push(j);
                }
            }
        }
        if !order.is_multiple_of(size) {
            return Err(Error::Domain(format!(
                "{spec}: class of size {size} does not divide {order}"
            )));
        }
        class_sizes.push(size);
    }

    Ok(ClassCount {
        spec,
        group_order: order,
        classes: class_sizes.len() as u64,
        class_sizes,
        field_polynomial: field.modulus_string(),
    })
}

fn generators(field: &FiniteField, kind: GroupKind, n: usize) -> Vec<Vec<u8>> {
    let p = field.characteristic();
    let q = field.order();
    // p^k for k < r is an F_p-basis of F_q in the coefficient encoding.
    let mut basis = Vec::new();
    let mut b = 1;
    while b < q {
        basis.push(b as u8);
        b *= p;
    }
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for &c in &basis {
                let mut m = vec![0u8; n * n];
                for k in 0..n {
                    m[k * n + k] = 1;
                }
                m[i * n + j] = c;
                gens.push(m);
            }
        }
    }
    if kind == GroupKind::Gl && q > 2 {
        let mut m = vec![0u8; n * n];
        for k in 0..n {
            m[k * n + k] = 1;
        }
        m[0] = field.generator_candidate();
        gens.push(m);
    }
    if gens.is_empty() {
        gens.push(vec![1u8; 1]);
    }
    gens
}

fn inverse_by_powers(ops: &MatOps<'_>, g: &[u8]) -> Vec<u8> {
    let id = ops.identity();
    let mut prev = id.clone();
    let mut cur = g.to_vec();
    let mut out = vec![0u8; g.len()];
    while cur != id {
        prev = cur.clone();
        ops.mul(&cur, g, &mut out);
        cur.copy_from_slice(&out);
    }
    // g^k = id with prev = g^{k-1}.
    if prev == id {
        g.to_vec()
    } else {
        prev
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(kind: GroupKind, n: u32, q: u64) -> u64 {
        conj_class_count(MatrixGroupSpec::new(kind, n, q), DEFAULT_BUDGET)
            .unwrap()
            .classes
    }

    #[test]
    fn small_groups() {
        assert_eq!(count(GroupKind::Gl, 2, 2), 3);
        assert_eq!(count(GroupKind::Sl, 2, 3), 7);
        assert_eq!(count(GroupKind::Gl, 2, 3), 8);
        assert_eq!(count(GroupKind::Gl, 1, 5), 4);
        assert_eq!(count(GroupKind::Sl, 1, 5), 1);
    }

    #[test]
    fn closed_form_orders() {
        let o = |k, n, q| MatrixGroupSpec::new(k, n, q).closed_form_order().unwrap();
        assert_eq!(o(GroupKind::Gl, 2, 2), 6);
        assert_eq!(o(GroupKind::Gl, 2, 3), 48);
        assert_eq!(o(GroupKind::Sl, 2, 5), 120);
        assert_eq!(o(GroupKind::Gl, 3, 3), 11232);
    }

    #[test]
    fn class_sizes_sum_to_the_order() {
        let c =
            conj_class_count(MatrixGroupSpec::new(GroupKind::Gl, 2, 4), DEFAULT_BUDGET).unwrap();
        assert_eq!(c.class_sizes.iter().sum::<u64>(), c.group_order);
        assert_eq!(c.field_polynomial, "x^2 + x + 1");
    }

    #[test]
    fn budget_is_a_hard_error() {
        let err = conj_class_count(MatrixGroupSpec::new(GroupKind::Gl, 2, 3), 10).unwrap_err();
        assert!(matches!(err, Error::Capacity(_)));
        let err = conj_class_count(MatrixGroupSpec::new(GroupKind::Gl, 4, 3), DEFAULT_BUDGET)
            .unwrap_err();
        assert!(matches!(err, Error::Capacity(_)));
    }
}
