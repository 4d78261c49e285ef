use std::fmt;

use crate::cuspidal::prime_power;
use crate::error::{domain, Result};

/// `F_q` as `F_p[x]/(f)` with explicit tables.
///
/// Element `c_0 + c_1 x + ... + c_{r-1} x^{r-1}` is stored as the integer
/// `c_0 + c_1 p + ... + c_{r-1} p^{r-1}`. The modulus `f` is the first
/// monic primitive polynomial of degree `r` when polynomials are listed
/// by that same encoding of their lower coefficients; for `r = 1` it is
/// `x` and arithmetic is plain arithmetic mod `p`.
#[derive(Clone)]
pub struct FiniteField {
    q: usize,
    p: usize,
    modulus: Vec<usize>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteField(q={}, modulus={})",
            self.q,
            self.modulus_string()
        )
    }
}

fn digits(mut x: usize, p: usize, r: usize) -> Vec<usize> {
    (0..r)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

// Product of two residues mod the monic `f` (low-to-high coefficients).
fn poly_mulmod(a: &[usize], b: &[usize], f: &[usize], p: usize) -> Vec<usize> {
    let r = f.len() - 1;
    let mut prod = vec![0; 2 * r];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (r..prod.len()).rev() {
        let c = prod[k];
        if c != 0 {
            for (i, &fi) in f.iter().enumerate().take(r) {
                let idx = k - r + i;
                prod[idx] = (prod[idx] + (p - c) * fi % p) % p;
            }
            prod[k] = 0;
        }
    }
    prod.truncate(r);
    prod
}

// Whether x generates (F_p[x]/f)^*, which also forces f irreducible.
fn is_primitive(f: &[usize], p: usize) -> bool {
    let r = f.len() - 1;
    let q = p.pow(r as u32);
    let mut x = vec![0; r];
    if r == 1 {
        return false;
    }
    x[1] = 1;
    let one = {
        let mut v = vec![0; r];
        v[0] = 1;
        v
    };
    let mut cur = x.clone();
    for k in 1..q - 1 {
        if cur == one {
            return k == q - 1;
        }
        if cur.iter().all(|&c| c == 0) {
            return false;
        }
        cur = poly_mulmod(&cur, &x, f, p);
    }
    cur == one
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let Some((p, r)) = prime_power(q) else {
            return domain(format!("{q} is not a prime power"));
        };
        if q > 256 {
            return domain(format!("field tables are limited to q <= 256, got {q}"));
        }
        let (q, p, r) = (q as usize, p as usize, r as usize);
        let modulus = if r == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|low| {
                    let mut f = digits(low, p, r);
                    f.push(1);
                    f
                })
                .find(|f| is_primitive(f, p))
                .expect("primitive polynomials exist in every degree")
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a, p, r);
            for b in 0..q {
                let db = digits(b, p, r);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&s, p) as u8;
                mul[a * q + b] = if r == 1 {
                    (a * b % p) as u8
                } else {
                    undigits(&poly_mulmod(&da, &db, &modulus, p), p) as u8
                };
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as u8;
                }
                if mul[a * q + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        Ok(FiniteField {
            q,
            p,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    /// Coefficients of the defining polynomial, lowest degree first.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        terms.join(" + ")
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    pub fn mul_table(&self) -> &[u8] {
        &self.mul
    }

    pub fn add_table(&self) -> &[u8] {
        &self.add
    }

    /// Class of `x` in `F_p[x]/(f)` (the element `p`), or 1 when `q = p`.
    pub fn generator_candidate(&self) -> u8 {
        if self.modulus.len() > 2 {
            self.p as u8
        } else {
            (1..self.q as u8)
                .find(|&g| self.multiplicative_order(g) == self.q - 1)
                .expect("F_p^* is cyclic")
        }
    }

    pub fn multiplicative_order(&self, a: u8) -> usize {
        assert!(a != 0, "zero has no multiplicative order");
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_uses_x2_x_1() {
        let f = FiniteField::new(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.mul_table().len(), 16);
        // x = 2, x + 1 = 3
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.modulus_string(), "x^2 + x + 1");
    }

    #[test]
    fn f2_is_boolean() {
        let f = FiniteField::new(2).unwrap();
        assert_eq!(f.add_table(), &[0, 1, 1, 0]);
        assert_eq!(f.mul_table(), &[0, 0, 0, 1]);
    }

    #[test]
    fn f9_is_cyclic_of_order_8() {
        let f = FiniteField::new(9).unwrap();
        assert_eq!(f.mul_table().len(), 81);
        assert_eq!(f.modulus(), &[2, 1, 1]);
        let g = f.generator_candidate();
        assert_eq!(f.multiplicative_order(g), 8);
    }

    #[test]
    fn field_axioms_hold_for_small_q() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            let q = q as u8;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        let lhs = f.mul(a, f.add(b, c));
                        let rhs = f.add(f.mul(a, b), f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            assert_eq!(f.multiplicative_order(f.generator_candidate()) as u8, q - 1);
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(1).is_err());
    }
}
