//! Finite abelian groups presented as subgroups of `Z/m1 x ... x Z/mk`.

use std::fmt;
use std::hash::{Hash, Hasher};

use super::intmat::{column_hermite, smith, ColumnHermite, Int, IntMatrix};
use super::phase::{gcd, lcm, Phase, Residue};
use crate::error::{Error, Result};

/// An element of an ambient product, one reduced residue per factor.
pub type Element = Vec<u64>;

/// A subgroup of `Z/m1 x ... x Z/mk`, stored through a canonical basis.
///
/// The basis elements have orders `d1 | d2 | ...`, all greater than one,
/// and the group is their internal direct sum. Equality compares the
/// subgroups themselves (same ambient, same element set), independent of
/// which basis the reduction happened to pick.
#[derive(Clone)]
pub struct FinAbGroup {
    ambient: Vec<u64>,
    basis: Vec<Element>,
    orders: Vec<u64>,
    // Hermite form of the preimage lattice in Z^k; unique per subgroup.
    key: Vec<Vec<Int>>,
    presentation: ColumnHermite,
}

impl PartialEq for FinAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.key == other.key
    }
}

impl Eq for FinAbGroup {}

impl Hash for FinAbGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.key.hash(state);
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinAbGroup")
            .field("ambient", &self.ambient)
            .field("basis", &self.basis)
            .field("invariant_factors", &self.orders)
            .finish()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.orders.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

fn check_ambient(ambient: &[u64]) -> Result<()> {
    if ambient.contains(&0) {
        return Err(Error::Domain("ambient moduli must be at least 1".into()));
    }
    Ok(())
}

fn reduce(ambient: &[u64], v: &[Int]) -> Element {
    v.iter()
        .zip(ambient)
        .map(|(&x, &m)| x.rem_euclid(m as Int) as u64)
        .collect()
}

fn presentation_matrix(ambient: &[u64], gens: &[Element]) -> IntMatrix {
    let k = ambient.len();
    let mut columns: Vec<Vec<Int>> = gens
        .iter()
        .map(|g| g.iter().map(|&x| x as Int).collect())
        .collect();
    for (i, &m) in ambient.iter().enumerate() {
        let mut c = vec![0; k];
        c[i] = m as Int;
        columns.push(c);
    }
    IntMatrix::from_columns(k, &columns)
}

impl FinAbGroup {
    /// Reduces a generating set to a canonical basis.
    ///
    /// Fails when a generator's residues do not use the ambient moduli.
    pub fn generated(ambient: &[u64], gens: &[Vec<Residue>]) -> Result<Self> {
        check_ambient(ambient)?;
        let mut raw = Vec::with_capacity(gens.len());
        for g in gens {
            if g.len() != ambient.len() || g.iter().zip(ambient).any(|(r, &m)| r.modulus() != m) {
                return Err(Error::Domain(format!(
                    "generator {g:?} does not lie in ambient product {ambient:?}"
                )));
            }
            raw.push(g.iter().map(|r| r.value()).collect());
        }
        Ok(Self::reduce_generators(ambient, &raw))
    }

    /// Like [`generated`](Self::generated) for plain tuples; entries are
    /// reduced modulo the ambient moduli first.
    pub fn generated_by(ambient: &[u64], gens: &[Element]) -> Result<Self> {
        check_ambient(ambient)?;
        let mut raw = Vec::with_capacity(gens.len());
        for g in gens {
            if g.len() != ambient.len() {
                return Err(Error::Domain(format!(
                    "generator {g:?} has {} entries, ambient has {}",
                    g.len(),
                    ambient.len()
                )));
            }
            raw.push(g.iter().zip(ambient).map(|(&x, &m)| x % m).collect());
        }
        Ok(Self::reduce_generators(ambient, &raw))
    }

    pub fn trivial(ambient: &[u64]) -> Result<Self> {
        Self::generated_by(ambient, &[])
    }

    /// The whole ambient product.
    pub fn whole(ambient: &[u64]) -> Result<Self> {
        let k = ambient.len();
        let units: Vec<Element> = (0..k)
            .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
            .collect();
        Self::generated_by(ambient, &units)
    }

    /// `Z/d1 x ... x Z/dr` with the unit vectors as its basis. Factors equal
    /// to one are dropped.
    pub fn from_invariant_factors(factors: &[u64]) -> Result<Self> {
        check_ambient(factors)?;
        let ambient: Vec<u64> = factors.iter().copied().filter(|&d| d > 1).collect();
        let mut sorted = ambient.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Domain(format!(
                "{factors:?} is not a divisibility chain"
            )));
        }
        let k = ambient.len();
        let basis: Vec<Element> = (0..k)
            .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
            .collect();
        Ok(Self::assemble(ambient.clone(), basis, ambient))
    }

    fn assemble(ambient: Vec<u64>, basis: Vec<Element>, orders: Vec<u64>) -> Self {
        let presentation = column_hermite(&presentation_matrix(&ambient, &basis));
        let key = (0..presentation.rank())
            .map(|j| presentation.hermite.column(j))
            .collect();
        FinAbGroup {
            ambient,
            basis,
            orders,
            key,
            presentation,
        }
    }

    fn reduce_generators(ambient: &[u64], gens: &[Element]) -> Self {
        let s = gens.len();
        if s == 0 {
            return Self::assemble(ambient.to_vec(), Vec::new(), Vec::new());
        }
        // Relations among the generators: the kernel of [G | diag(m)]
        // projected onto the generator coordinates.
        let full = column_hermite(&presentation_matrix(ambient, gens));
        let relations: Vec<Vec<Int>> = full
            .kernel_basis()
            .into_iter()
            .map(|v| v[..s].to_vec())
            .collect();
        let rel = IntMatrix::from_columns(s, &relations);
        let snf = smith(&rel);
        let factors = snf.invariant_factors();

        let gen_matrix = IntMatrix::from_columns(
            ambient.len(),
            &gens
                .iter()
                .map(|g| g.iter().map(|&x| x as Int).collect())
                .collect::<Vec<_>>(),
        );
        let new_gens = gen_matrix.mul(&snf.left_inv);
        let mut basis = Vec::new();
        let mut orders = Vec::new();
        for i in 0..s {
            let d = factors.get(i).copied().unwrap_or(0);
            assert!(d > 0, "generator of infinite order in a finite ambient");
            if d == 1 {
                continue;
            }
            basis.push(reduce(ambient, &new_gens.column(i)));
            orders.push(d as u64);
        }
        Self::assemble(ambient.to_vec(), basis, orders)
    }

    pub fn ambient(&self) -> &[u64] {
        &self.ambient
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.len() <= 1
    }

    /// Same invariant factors.
    pub fn is_isomorphic(&self, other: &FinAbGroup) -> bool {
        self.orders == other.orders
    }

    pub fn zero(&self) -> Element {
        vec![0; self.ambient.len()]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Element {
        a.iter()
            .zip(b)
            .zip(&self.ambient)
            .map(|((&x, &y), &m)| ((x as u128 + y as u128) % m as u128) as u64)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Element {
        a.iter()
            .zip(&self.ambient)
            .map(|(&x, &m)| (m - x % m) % m)
            .collect()
    }

    pub fn scale(&self, a: &[u64], k: u64) -> Element {
        a.iter()
            .zip(&self.ambient)
            .map(|(&x, &m)| ((x as u128 * k as u128) % m as u128) as u64)
            .collect()
    }

    /// Order of an ambient element.
    pub fn element_order(&self, a: &[u64]) -> u64 {
        a.iter()
            .zip(&self.ambient)
            .fold(1, |acc, (&x, &m)| lcm(acc, m / gcd(x % m, m)))
    }

    /// Coordinates of `x` in the canonical basis, or `None` if `x` is not
    /// in the group.
    pub fn coordinates(&self, x: &[u64]) -> Option<Vec<u64>> {
        if x.len() != self.ambient.len() {
            return None;
        }
        let target: Vec<Int> = x.iter().map(|&v| v as Int).collect();
        let z = self.presentation.solve(&target)?;
        Some(
            self.orders
                .iter()
                .enumerate()
                .map(|(i, &d)| z[i].rem_euclid(d as Int) as u64)
                .collect(),
        )
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        self.coordinates(x).is_some()
    }

    /// The element with the given basis coordinates.
    pub fn element(&self, coords: &[u64]) -> Element {
        let mut acc = self.zero();
        for (c, b) in coords.iter().zip(&self.basis) {
            acc = self.add(&acc, &self.scale(b, *c));
        }
        acc
    }

    /// Every coordinate tuple, in mixed-radix order (first coordinate fastest).
    pub fn coordinate_tuples(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let total = self.order();
        (0..total).map(move |mut n| {
            self.orders
                .iter()
                .map(|&d| {
                    let c = n % d;
                    n /= d;
                    c
                })
                .collect()
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.coordinate_tuples().map(|c| self.element(&c))
    }

    pub fn is_subgroup_of(&self, other: &FinAbGroup) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    /// `Hom(G, Q/Z)`, presented as `Z/d1 x ... x Z/dr`. The coordinate
    /// `c` of a dual element is the character sending the i-th canonical
    /// basis element of `self` to `c_i / d_i`; see [`pair`](Self::pair).
    pub fn dual(&self) -> FinAbGroup {
        Self::from_invariant_factors(&self.orders).expect("invariant factors form a chain")
    }

    /// Evaluates the dual element with coordinates `chi` on `x`.
    pub fn pair(&self, chi: &[u64], x: &[u64]) -> Option<Phase> {
        let a = self.coordinates(x)?;
        Some(
            chi.iter()
                .zip(&a)
                .zip(&self.orders)
                .fold(Phase::ZERO, |acc, ((&c, &ai), &d)| {
                    acc + Phase::new(c as i128 * ai as i128, d).expect("d >= 2")
                }),
        )
    }
}

/// A homomorphism, stored by the images of the source's canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FinAbGroup,
    target: FinAbGroup,
    images: Vec<Element>,
}

/// `representative + kernel`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    pub representative: Element,
    pub kernel: FinAbGroup,
}

impl Coset {
    pub fn elements(&self) -> Vec<Element> {
        self.kernel
            .elements()
            .map(|k| self.kernel.add(&self.representative, &k))
            .collect()
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        let diff = self.kernel.add(x, &self.kernel.neg(&self.representative));
        self.kernel.contains(&diff)
    }

    pub fn len(&self) -> u64 {
        self.kernel.order()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl GroupHom {
    pub fn new(source: FinAbGroup, target: FinAbGroup, images: Vec<Element>) -> Result<Self> {
        if images.len() != source.basis.len() {
            return Err(Error::Domain(format!(
                "{} images given for {} generators",
                images.len(),
                source.basis.len()
            )));
        }
        for (img, &d) in images.iter().zip(&source.orders) {
            if !target.contains(img) {
                return Err(Error::Domain(format!("image {img:?} is not in the target")));
            }
            if d % target.element_order(img) != 0 {
                return Err(Error::Domain(format!(
                    "image {img:?} has order not dividing generator order {d}"
                )));
            }
        }
        Ok(GroupHom {
            source,
            target,
            images,
        })
    }

    /// Builds a homomorphism from a map on ambient elements; only the
    /// canonical basis is evaluated.
    pub fn from_fn(
        source: FinAbGroup,
        target: FinAbGroup,
        f: impl Fn(&[u64]) -> Element,
    ) -> Result<Self> {
        let images = source.basis.iter().map(|b| f(b)).collect();
        Self::new(source, target, images)
    }

    pub fn zero(source: FinAbGroup, target: FinAbGroup) -> Self {
        let images = vec![target.zero(); source.basis.len()];
        GroupHom {
            source,
            target,
            images,
        }
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, x: &[u64]) -> Option<Element> {
        let coords = self.source.coordinates(x)?;
        Some(self.apply_coordinates(&coords))
    }

    pub fn apply_coordinates(&self, coords: &[u64]) -> Element {
        let mut acc = self.target.zero();
        for (c, img) in coords.iter().zip(&self.images) {
            acc = self.target.add(&acc, &self.target.scale(img, *c));
        }
        acc
    }

    fn image_system(&self) -> ColumnHermite {
        column_hermite(&presentation_matrix(self.target.ambient(), &self.images))
    }

    fn combine_source(&self, a: &[Int]) -> Element {
        let mut acc = vec![0 as Int; self.source.ambient.len()];
        for (ai, b) in a.iter().zip(&self.source.basis) {
            for (slot, &bx) in acc.iter_mut().zip(b) {
                *slot += ai * bx as Int;
            }
        }
        reduce(&self.source.ambient, &acc)
    }

    pub fn kernel(&self) -> FinAbGroup {
        let r = self.images.len();
        let gens: Vec<Element> = self
            .image_system()
            .kernel_basis()
            .iter()
            .map(|v| self.combine_source(&v[..r]))
            .collect();
        FinAbGroup::generated_by(&self.source.ambient, &gens).expect("ambient already validated")
    }

    pub fn image(&self) -> FinAbGroup {
        FinAbGroup::generated_by(&self.target.ambient, &self.images)
            .expect("ambient already validated")
    }

    pub fn kernel_image(&self) -> (FinAbGroup, FinAbGroup) {
        (self.kernel(), self.image())
    }

    /// `f^{-1}(y)`: empty when `y` is outside the image, otherwise a coset
    /// of the kernel.
    pub fn preimage_coset(&self, y: &[u64]) -> Option<Coset> {
        if !self.target.contains(y) {
            return None;
        }
        let r = self.images.len();
        let target: Vec<Int> = y.iter().map(|&v| v as Int).collect();
        let z = self.image_system().solve(&target)?;
        Some(Coset {
            representative: self.combine_source(&z[..r]),
            kernel: self.kernel(),
        })
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }

    /// The dual map `Hom(target, Q/Z) -> Hom(source, Q/Z)`, `psi -> psi o f`,
    /// in the coordinates of [`FinAbGroup::dual`].
    pub fn dual(&self) -> GroupHom {
        let dual_source = self.target.dual();
        let dual_target = self.source.dual();
        let image_coords: Vec<Vec<u64>> = self
            .images
            .iter()
            .map(|img| self.target.coordinates(img).expect("images lie in target"))
            .collect();
        let images: Vec<Element> = (0..self.target.orders.len())
            .map(|i| {
                let e = self.target.orders[i];
                image_coords
                    .iter()
                    .zip(&self.source.orders)
                    .map(|(coords, &d)| {
                        // psi_i(f(g_j)) = coords_i / e, scaled into Z/d_j.
                        let ph = Phase::new(coords[i] as i128, e).expect("e >= 2");
                        debug_assert_eq!(d % ph.denominator(), 0);
                        ph.numerator() * (d / ph.denominator())
                    })
                    .collect()
            })
            .collect();
        GroupHom::new(dual_source, dual_target, images).expect("dual of a homomorphism")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn res(v: &[(u64, u64)]) -> Vec<Residue> {
        v.iter()
            .map(|&(x, m)| Residue::new(x as i128, m).unwrap())
            .collect()
    }

    // Brute-force closure of a generating set, independent of the reduction.
    fn closure(ambient: &[u64], gens: &[Element]) -> HashSet<Element> {
        let zero = vec![0; ambient.len()];
        let mut seen: HashSet<Element> = HashSet::from([zero.clone()]);
        let mut frontier = vec![zero];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y: Element = x
                    .iter()
                    .zip(g)
                    .zip(ambient)
                    .map(|((&a, &b), &m)| (a + b) % m)
                    .collect();
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn snf_single_generator_of_order_two() {
        let g = FinAbGroup::generated(&[4, 6], &[res(&[(2, 4), (3, 6)])]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.invariant_factors(), &[2]);
    }

    #[test]
    fn snf_empty_generation() {
        let g = FinAbGroup::generated(&[4, 6], &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_trivial());
    }

    #[test]
    fn snf_whole_z4_times_z6() {
        // Exhaustive enumeration of Z/4 x Z/6: 24 elements, maximal element
        // order 12, so the invariant factors must be (2, 12).
        let mut max_order = 1;
        for a in 0..4u64 {
            for b in 0..6u64 {
                max_order = max_order.max(lcm(4 / gcd(a, 4), 6 / gcd(b, 6)));
            }
        }
        assert_eq!(max_order, 12);
        let g = FinAbGroup::generated(&[4, 6], &[res(&[(1, 4), (0, 6)]), res(&[(0, 4), (1, 6)])])
            .unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.invariant_factors(), &[2, 12]);
    }

    #[test]
    fn snf_rejects_modulus_mismatch() {
        let err = FinAbGroup::generated(&[4, 6], &[res(&[(1, 5), (0, 6)])]);
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn dual_examples() {
        let z6 = FinAbGroup::whole(&[6]).unwrap();
        assert_eq!(z6.dual().invariant_factors(), &[6]);
        let triv = FinAbGroup::trivial(&[5]).unwrap();
        assert!(triv.dual().is_trivial());
        let g = FinAbGroup::whole(&[4, 6]).unwrap();
        assert_eq!(g.dual().invariant_factors(), &[2, 12]);
    }

    #[test]
    fn projection_kernel_image() {
        let src = FinAbGroup::whole(&[4, 6]).unwrap();
        let tgt = FinAbGroup::whole(&[4]).unwrap();
        let f = GroupHom::from_fn(src, tgt, |x| vec![x[0]]).unwrap();
        let (k, i) = f.kernel_image();
        assert_eq!((k.order(), i.order()), (6, 4));

        let coset = f.preimage_coset(&[1]).unwrap();
        assert_eq!(f.apply(&coset.representative).unwrap(), vec![1]);
        assert_eq!(coset.kernel.order(), 6);
        assert!(coset.contains(&[1, 0]));
    }

    #[test]
    fn zero_map_kernel_image_and_preimages() {
        let src = FinAbGroup::whole(&[5]).unwrap();
        let tgt = FinAbGroup::whole(&[3]).unwrap();
        let f = GroupHom::zero(src, tgt);
        let (k, i) = f.kernel_image();
        assert_eq!((k.order(), i.order()), (5, 1));
        let all = f.preimage_coset(&[0]).unwrap();
        assert_eq!(all.elements().len(), 5);
        assert!(f.preimage_coset(&[1]).is_none());
    }

    #[test]
    fn dual_of_inclusion_z2_into_z4() {
        // Oracle: the four characters of Z/4 are k -> c*k/4; restricted to
        // {0, 2} they give c*2/4, trivial exactly for c in {0, 2}.
        let trivial_on_z2 = (0..4u64).filter(|c| (c * 2) % 4 == 0).count();
        assert_eq!(trivial_on_z2, 2);

        let z2 = FinAbGroup::generated_by(&[4], &[vec![2]]).unwrap();
        let z4 = FinAbGroup::whole(&[4]).unwrap();
        let incl = GroupHom::from_fn(z2, z4, |x| x.to_vec()).unwrap();
        let d = incl.dual();
        let (k, i) = d.kernel_image();
        assert_eq!((k.order(), i.order()), (2, 2));
        assert!(d.is_surjective());
        assert!(!d.is_injective());
    }

    #[test]
    fn rejects_badly_ordered_images() {
        let src = FinAbGroup::whole(&[2]).unwrap();
        let tgt = FinAbGroup::whole(&[3]).unwrap();
        assert!(GroupHom::new(src, tgt, vec![vec![1]]).is_err());
    }

    #[test]
    fn equality_is_on_subgroups() {
        let a = FinAbGroup::generated_by(&[12], &[vec![4]]).unwrap();
        let b = FinAbGroup::generated_by(&[12], &[vec![8], vec![0]]).unwrap();
        assert_eq!(a, b);
        let c = FinAbGroup::generated_by(&[12], &[vec![6]]).unwrap();
        assert_ne!(a, c);
        assert!(c.is_subgroup_of(&FinAbGroup::whole(&[12]).unwrap()));
    }

    fn arb_group() -> impl Strategy<Value = (Vec<u64>, Vec<Element>)> {
        prop::collection::vec(1u64..13, 1..=3).prop_flat_map(|ambient| {
            let a = ambient.clone();
            let elem = ambient.iter().map(|&m| 0..m).collect::<Vec<_>>();
            (Just(a), prop::collection::vec(elem, 0..4))
        })
    }

    proptest! {
        #[test]
        fn order_matches_enumeration((ambient, gens) in arb_group()) {
            let g = FinAbGroup::generated_by(&ambient, &gens).unwrap();
            let brute = closure(&ambient, &gens);
            prop_assert_eq!(g.order() as usize, brute.len());
            let listed: HashSet<Element> = g.elements().collect();
            prop_assert_eq!(&listed, &brute);
            for w in g.invariant_factors().windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            for (b, &d) in g.basis().iter().zip(g.invariant_factors()) {
                prop_assert_eq!(g.element_order(b), d);
            }
            for x in &brute {
                let c = g.coordinates(x).unwrap();
                prop_assert_eq!(&g.element(&c), x);
            }
        }

        #[test]
        fn dual_is_an_involution_on_invariant_factors((ambient, gens) in arb_group()) {
            let g = FinAbGroup::generated_by(&ambient, &gens).unwrap();
            let d = g.dual();
            let dd = d.dual();
            prop_assert_eq!(d.invariant_factors(), g.invariant_factors());
            prop_assert_eq!(dd.invariant_factors(), g.invariant_factors());
        }

        #[test]
        fn pairing_is_nondegenerate((ambient, gens) in arb_group()) {
            let g = FinAbGroup::generated_by(&ambient, &gens).unwrap();
            let dual = g.dual();
            let chars: Vec<Element> = dual.elements().collect();
            for x in g.elements() {
                let trivial_everywhere = chars.iter().all(|c| g.pair(c, &x).unwrap().is_zero());
                prop_assert_eq!(trivial_everywhere, x.iter().all(|&v| v == 0));
            }
        }

        #[test]
        fn kernel_times_image_is_source(
            (ambient, gens) in arb_group(),
            tgt in prop::collection::vec(1u64..10, 1..=2),
            seed in prop::collection::vec(0u64..1000, 12),
        ) {
            let src = FinAbGroup::generated_by(&ambient, &gens).unwrap();
            let whole_tgt = FinAbGroup::whole(&tgt).unwrap();
            // Send each basis element to a random multiple of a target
            // element of compatible order.
            let images: Vec<Element> = src
                .basis()
                .iter()
                .zip(src.invariant_factors())
                .enumerate()
                .map(|(i, (_, &d))| {
                    let y: Element = tgt.iter().enumerate().map(|(j, &m)| seed[(i * 3 + j) % 12] % m).collect();
                    // scale y so that d * y == 0
                    let o = whole_tgt.element_order(&y);
                    let g = gcd(o, d);
                    whole_tgt.scale(&y, o / g)
                })
                .collect();
            let f = GroupHom::new(src.clone(), whole_tgt, images).unwrap();
            let (k, i) = f.kernel_image();
            prop_assert_eq!(k.order() * i.order(), src.order());
            for x in k.elements() {
                prop_assert!(f.apply(&x).unwrap().iter().all(|&v| v == 0));
            }
            // Dual map: evaluation compatibility psi(f(x)) == f^(psi)(x).
            let d = f.dual();
            for psi in f.target().dual().elements() {
                let pulled = d.apply(&psi).unwrap();
                for x in src.elements() {
                    let lhs = f.target().pair(&psi, &f.apply(&x).unwrap()).unwrap();
                    let rhs = src.pair(&pulled, &x).unwrap();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
