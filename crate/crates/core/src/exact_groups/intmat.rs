//! Dense integer matrices with Hermite and Smith reductions.
//!
//! Everything here works over `i128` so that the unimodular transforms
//! produced on the small presentations used by the group layer never
//! overflow in practice. Entries are stored row-major.

use std::fmt;

pub type Int = i128;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Int>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, &x) in c.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: Int) {
        if factor == 0 {
            return;
        }
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] += factor * v;
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: Int) {
        if factor == 0 {
            return;
        }
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] += factor * v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)];
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }

    /// Applies the unimodular 2x2 transform
    /// `(col_a, col_b) <- (s*col_a + t*col_b, u*col_a + v*col_b)`.
    fn mix_cols(&mut self, a: usize, b: usize, s: Int, t: Int, u: Int, v: Int) {
        for i in 0..self.rows {
            let x = self[(i, a)];
            let y = self[(i, b)];
            self[(i, a)] = s * x + t * y;
            self[(i, b)] = u * x + v * y;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

/// Extended Euclid: returns `(g, s, t)` with `g = s*a + t*b >= 0`.
pub fn ext_gcd(a: Int, b: Int) -> (Int, Int, Int) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1, 0);
    let (mut old_t, mut t) = (0, 1);
    while r != 0 {
        let quot = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
        (old_t, t) = (t, old_t - quot * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Column-style Hermite normal form.
///
/// `a * transform == hermite`, with `transform` unimodular. The first
/// `pivots.len()` columns of `hermite` are in echelon form (column `j` has
/// its leading nonzero entry at row `pivots[j]`, strictly increasing, and
/// positive); entries left of a pivot in its row are reduced into
/// `[0, pivot)`. Remaining columns are zero, so the matching columns of
/// `transform` span the integer kernel of `a`.
#[derive(Debug, Clone)]
pub struct ColumnHermite {
    pub hermite: IntMatrix,
    pub transform: IntMatrix,
    pub pivots: Vec<usize>,
}

impl ColumnHermite {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A basis of the integer kernel of the reduced matrix.
    pub fn kernel_basis(&self) -> Vec<Vec<Int>> {
        (self.rank()..self.transform.cols())
            .map(|j| self.transform.column(j))
            .collect()
    }

    /// Some integer `x` with `a * x == target`, if one exists.
    pub fn solve(&self, target: &[Int]) -> Option<Vec<Int>> {
        let h = &self.hermite;
        assert_eq!(target.len(), h.rows(), "dimension mismatch");
        let mut residual = target.to_vec();
        let mut w = vec![0; h.cols()];
        let mut next = 0;
        for i in 0..h.rows() {
            if next < self.pivots.len() && self.pivots[next] == i {
                let p = h[(i, next)];
                if residual[i] % p != 0 {
                    return None;
                }
                let c = residual[i] / p;
                w[next] = c;
                for (r, val) in residual.iter_mut().enumerate() {
                    *val -= c * h[(r, next)];
                }
                next += 1;
            } else if residual[i] != 0 {
                return None;
            }
        }
        Some(self.transform.mul_vec(&w))
    }
}

pub fn column_hermite(a: &IntMatrix) -> ColumnHermite {
    let mut h = a.clone();
    let mut v = IntMatrix::identity(a.cols());
    let mut pivots = Vec::new();
    let mut c = 0;
    for i in 0..h.rows() {
        if c == h.cols() {
            break;
        }
        // Collapse row i over columns c.. onto column c.
        for k in c + 1..h.cols() {
            let y = h[(i, k)];
            if y == 0 {
                continue;
            }
            let x = h[(i, c)];
            if x == 0 {
                h.swap_cols(c, k);
                v.swap_cols(c, k);
                continue;
            }
            if y % x == 0 {
                let f = -(y / x);
                h.add_col(k, c, f);
                v.add_col(k, c, f);
                continue;
            }
            let (g, s, t) = ext_gcd(x, y);
            let (u, w) = (-y / g, x / g);
            h.mix_cols(c, k, s, t, u, w);
            v.mix_cols(c, k, s, t, u, w);
        }
        let p = h[(i, c)];
        if p == 0 {
            continue;
        }
        if p < 0 {
            h.negate_col(c);
            v.negate_col(c);
        }
        let p = h[(i, c)];
        for j in 0..c {
            let f = -h[(i, j)].div_euclid(p);
            h.add_col(j, c, f);
            v.add_col(j, c, f);
        }
        pivots.push(i);
        c += 1;
    }
    ColumnHermite {
        hermite: h,
        transform: v,
        pivots,
    }
}

/// Smith normal form `left * a * right == diagonal`.
///
/// `left_inv` is the inverse of `left`. The diagonal entries are
/// nonnegative and each divides the next (zeros last).
#[derive(Debug, Clone)]
pub struct Smith {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub right: IntMatrix,
}

impl Smith {
    pub fn invariant_factors(&self) -> Vec<Int> {
        let n = self.diagonal.rows().min(self.diagonal.cols());
        (0..n).map(|i| self.diagonal[(i, i)]).collect()
    }
}

pub fn smith(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut left = IntMatrix::identity(m);
    let mut left_inv = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);

    // Row operation on `left` is mirrored by the inverse column operation on `left_inv`.
    macro_rules! row_add {
        ($dst:expr, $src:expr, $f:expr) => {{
            let (dst, src, f) = ($dst, $src, $f);
            d.add_row(dst, src, f);
            left.add_row(dst, src, f);
            left_inv.add_col(src, dst, -f);
        }};
    }
    macro_rules! row_swap {
        ($a:expr, $b:expr) => {{
            let (a, b) = ($a, $b);
            d.swap_rows(a, b);
            left.swap_rows(a, b);
            left_inv.swap_cols(a, b);
        }};
    }

    for t in 0..m.min(n) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = d[(i, j)];
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            row_swap!(t, pi);
            d.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let p = d[(t, t)];
            let mut clean = true;
            for i in t + 1..m {
                let q = d[(i, t)].div_euclid(p);
                if q != 0 {
                    row_add!(i, t, -q);
                }
                if d[(i, t)] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_euclid(p);
                if q != 0 {
                    d.add_col(j, t, -q);
                    right.add_col(j, t, -q);
                }
                if d[(t, j)] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let mut offender = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if d[(i, j)] % p != 0 {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => row_add!(t, i, 1),
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            left.negate_row(t);
            left_inv.negate_col(t);
        }
    }
    Smith {
        diagonal: d,
        left,
        left_inv,
        right,
    }
}
