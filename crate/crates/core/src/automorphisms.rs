//! The six `F_p`-fixing automorphisms of `S`.
//!
//! Every ring endomorphism fixing `F_p` is determined by the image `t` of `v`,
//! and `t` must satisfy `t^3 = t`. The closed forms below are the six maps
//! whose image of `v` makes the induced map bijective. The brute-force side
//! of this module never looks at the closed forms except to attach an id to
//! a bijection it already found.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{PrimeModulus, RingElement};

/// Identifier of one of the six automorphisms `theta_1 .. theta_6`.
///
/// `1` is the identity and `2` is `a + bv + cv^2 -> a - bv + cv^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AutomorphismId(u8);

impl AutomorphismId {
    pub const IDENTITY: AutomorphismId = AutomorphismId(1);

    pub const ALL: [AutomorphismId; 6] = [
        AutomorphismId(1),
        AutomorphismId(2),
        AutomorphismId(3),
        AutomorphismId(4),
        AutomorphismId(5),
        AutomorphismId(6),
    ];

    pub fn new(id: u64) -> Result<Self> {
        match id {
            1..=6 => Ok(AutomorphismId(id as u8)),
            _ => Err(Error::InvalidAutomorphismId(id)),
        }
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    #[inline]
    fn slot(self) -> usize {
        self.0 as usize - 1
    }

    /// Image of `v`. Halves are resolved with `(p + 1) / 2`.
    pub fn image_of_v(self, p: PrimeModulus) -> RingElement {
        let h = p.half();
        let three_h = p.mul(3, h);
        let (one, minus_one) = (1, p.neg(1));
        let (a, b, c) = match self.0 {
            1 => (0, 1, 0),
            2 => (0, p.neg(1), 0),
            // 1 - v/2 - 3v^2/2
            3 => (one, p.neg(h), p.neg(three_h)),
            // 1 + v/2 - 3v^2/2
            4 => (one, h, p.neg(three_h)),
            // -1 + v/2 + 3v^2/2
            5 => (minus_one, h, three_h),
            // -1 - v/2 + 3v^2/2
            6 => (minus_one, p.neg(h), three_h),
            _ => unreachable!("AutomorphismId is always in 1..=6"),
        };
        RingElement::new(a, b, c, p).expect("canonical residues")
    }

    /// Applies the closed form of this automorphism.
    pub fn apply(self, z: &RingElement) -> RingElement {
        let p = z.modulus();
        let h = p.half();
        let [a, b, c] = z.coefficients();
        let sum = p.add(p.add(a, b), c);
        let alt = p.add(p.sub(a, b), c);
        let b_minus_c = p.mul(p.sub(b, c), h);
        let b_plus_c = p.mul(p.add(b, c), h);
        let three_b_plus_c = p.mul(p.add(p.mul(3, b), c), h);
        let three_b_minus_c = p.mul(p.sub(p.mul(3, b), c), h);
        let (x, y, w) = match self.0 {
            1 => (a, b, c),
            2 => (a, p.neg(b), c),
            3 => (sum, p.neg(b_minus_c), p.neg(three_b_plus_c)),
            4 => (sum, b_minus_c, p.neg(three_b_plus_c)),
            5 => (alt, b_plus_c, three_b_minus_c),
            6 => (alt, p.neg(b_plus_c), three_b_minus_c),
            _ => unreachable!("AutomorphismId is always in 1..=6"),
        };
        RingElement::new(x, y, w, p).expect("canonical residues")
    }

    /// Applies this automorphism `k` times.
    pub fn apply_pow(self, k: usize, z: &RingElement) -> RingElement {
        let k = k % self.order();
        (0..k).fold(*z, |acc, _| self.apply(&acc))
    }

    /// Order of the automorphism in the group, at most 6.
    pub fn order(self) -> usize {
        // Orders do not depend on p; 3 is the smallest admissible prime.
        let p = PrimeModulus::new(3).expect("3 is an odd prime");
        let v = RingElement::v(p);
        let mut image = self.apply(&v);
        let mut k = 1;
        while image != v {
            image = self.apply(&image);
            k += 1;
            assert!(k <= 6, "automorphism order exceeds the group order");
        }
        k
    }
}

impl fmt::Display for AutomorphismId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::str::FromStr for AutomorphismId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id: u64 = s.trim().parse().map_err(|_| Error::Parse {
            what: "automorphism id",
            detail: format!("`{s}` is not an integer"),
        })?;
        AutomorphismId::new(id)
    }
}

pub fn theta_image_of_v(id: AutomorphismId, p: PrimeModulus) -> RingElement {
    id.image_of_v(p)
}

pub fn theta_apply(id: AutomorphismId, z: &RingElement) -> RingElement {
    id.apply(z)
}

/// `a + b*t + c*t^2`: the `F_p`-linear map sending `v` to `t`.
pub fn theta_apply_via_image(t: &RingElement, z: &RingElement) -> Result<RingElement> {
    let p = z.modulus();
    if t.modulus() != p {
        return Err(Error::ModulusMismatch {
            left: t.modulus().get(),
            right: p.get(),
        });
    }
    let t2 = *t * *t;
    Ok(RingElement::scalar(z.a(), p) + t.scale(z.b()) + t2.scale(z.c()))
}

/// The preimage of `x + yv + zv^2` under `theta_3`.
pub fn onto_witness_theta3(x: u64, y: u64, z: u64, p: PrimeModulus) -> RingElement {
    let (x, y, z) = (p.reduce(x), p.reduce(y), p.reduce(z));
    let h = p.half();
    let a = p.add(p.sub(x, y), z);
    let b = p.neg(p.mul(p.add(y, z), h));
    let c = p.mul(p.sub(p.mul(3, y), z), h);
    RingElement::new(a, b, c, p).expect("canonical residues")
}

/// An element `t` with `t^3 = t`, together with what the map `v -> t` does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndomorphismCandidate {
    pub image_of_v: RingElement,
    pub injective: bool,
    /// Set exactly when the map is bijective and its image of `v` matches a closed form.
    pub automorphism_id: Option<AutomorphismId>,
    /// Two distinct elements with the same image, for non-injective maps.
    pub collision: Option<(RingElement, RingElement)>,
}

fn image_table(t: &RingElement) -> Vec<RingElement> {
    let p = t.modulus();
    let t2 = *t * *t;
    RingElement::all(p)
        .map(|z| RingElement::scalar(z.a(), p) + t.scale(z.b()) + t2.scale(z.c()))
        .collect()
}

fn first_collision(table: &[RingElement], p: PrimeModulus) -> Option<(RingElement, RingElement)> {
    let mut seen: Vec<Option<usize>> = vec![None; table.len()];
    for (i, image) in table.iter().enumerate() {
        let slot = &mut seen[image.index()];
        match slot {
            Some(j) => {
                return Some((
                    RingElement::from_index(*j, p),
                    RingElement::from_index(i, p),
                ));
            }
            None => *slot = Some(i),
        }
    }
    None
}

fn match_closed_form(t: &RingElement) -> Option<AutomorphismId> {
    AutomorphismId::ALL
        .into_iter()
        .find(|id| id.image_of_v(t.modulus()) == *t)
}

/// Every `t` in `S` with `t^3 = t`, in lexicographic order, annotated with
/// the injectivity of `a + bv + cv^2 -> a + bt + ct^2`.
pub fn enumerate_endomorphism_candidates(p: PrimeModulus) -> Vec<EndomorphismCandidate> {
    let survivors: Vec<RingElement> = (0..p.ring_size() as usize)
        .into_par_iter()
        .map(|i| RingElement::from_index(i, p))
        .filter(|t| *t * *t * *t == *t)
        .collect();

    survivors
        .into_par_iter()
        .map(|t| {
            let table = image_table(&t);
            let collision = first_collision(&table, p);
            let injective = collision.is_none();
            EndomorphismCandidate {
                image_of_v: t,
                injective,
                automorphism_id: if injective {
                    match_closed_form(&t)
                } else {
                    None
                },
                collision,
            }
        })
        .collect()
}

fn is_multiplicative(table: &[RingElement], p: PrimeModulus) -> bool {
    (0..table.len()).into_par_iter().all(|i| {
        let z = RingElement::from_index(i, p);
        let fz = table[i];
        RingElement::all(p)
            .enumerate()
            .all(|(j, w)| table[(z * w).index()] == fz * table[j])
    })
}

/// Brute-force automorphism search: images of `v` whose induced map is a
/// bijective, multiplicative self-map of `S`, each paired with its closed-form id.
///
/// Multiplicativity is checked over all `p^6` pairs, so this is meant for
/// small primes.
pub fn enumerate_automorphisms_bruteforce(
    p: PrimeModulus,
) -> Result<Vec<(RingElement, AutomorphismId)>> {
    let mut out = Vec::new();
    for cand in enumerate_endomorphism_candidates(p) {
        if !cand.injective {
            continue;
        }
        let t = cand.image_of_v;
        if !is_multiplicative(&image_table(&t), p) {
            return Err(Error::InternalMismatch(format!(
                "bijection v -> {t} is not multiplicative at p = {p}"
            )));
        }
        let id = cand.automorphism_id.ok_or_else(|| {
            Error::InternalMismatch(format!(
                "automorphism v -> {t} matches no closed form at p = {p}"
            ))
        })?;
        out.push((t, id));
    }
    Ok(out)
}

/// Summary of the brute-force search checked against the closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub candidates: usize,
    pub automorphisms: usize,
    pub non_injective: usize,
}

/// Runs the brute-force search and demands it finds exactly the six closed forms.
pub fn cross_check(p: PrimeModulus) -> Result<OracleReport> {
    let candidates = enumerate_endomorphism_candidates(p);
    let found = enumerate_automorphisms_bruteforce(p)?;
    let mut found_images: Vec<RingElement> = found.iter().map(|(t, _)| *t).collect();
    let mut expected: Vec<RingElement> = AutomorphismId::ALL
        .iter()
        .map(|id| id.image_of_v(p))
        .collect();
    found_images.sort_by_key(RingElement::index);
    expected.sort_by_key(RingElement::index);
    if found_images != expected {
        return Err(Error::InternalMismatch(format!(
            "brute force found {} automorphisms at p = {p}, closed forms give 6",
            found.len()
        )));
    }
    for (t, id) in &found {
        let matches = RingElement::all(p).all(|z| {
            theta_apply_via_image(t, &z)
                .map(|w| w == id.apply(&z))
                .unwrap_or(false)
        });
        if !matches {
            return Err(Error::InternalMismatch(format!(
                "closed form of theta_{id} disagrees with v -> {t} at p = {p}"
            )));
        }
    }
    Ok(OracleReport {
        candidates: candidates.len(),
        automorphisms: found.len(),
        non_injective: candidates.iter().filter(|c| !c.injective).count(),
    })
}

/// The id `k` with `theta_i(theta_j(z)) = theta_k(z)`.
pub fn compose(i: AutomorphismId, j: AutomorphismId, p: PrimeModulus) -> Result<AutomorphismId> {
    let image = i.apply(&j.apply(&RingElement::v(p)));
    match_closed_form(&image).ok_or_else(|| {
        Error::InternalMismatch(format!(
            "theta_{i} o theta_{j} sends v to {image}, which is no closed form (p = {p})"
        ))
    })
}

/// Composition table: entry `(i, j)` is the id of `theta_i o theta_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupTable {
    entries: [[AutomorphismId; 6]; 6],
}

impl GroupTable {
    pub fn get(&self, i: AutomorphismId, j: AutomorphismId) -> AutomorphismId {
        self.entries[i.slot()][j.slot()]
    }

    pub fn rows(&self) -> &[[AutomorphismId; 6]; 6] {
        &self.entries
    }

    /// Rows as plain integers, for serialization.
    pub fn to_ids(&self) -> Vec<Vec<u8>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|id| id.get()).collect())
            .collect()
    }

    /// Order of `id`, found by repeated composition (capped at 6).
    pub fn order(&self, id: AutomorphismId) -> Result<usize> {
        let mut acc = id;
        for k in 1..=6 {
            if acc == AutomorphismId::IDENTITY {
                return Ok(k);
            }
            acc = self.get(id, acc);
        }
        Err(Error::InternalMismatch(format!(
            "theta_{id} has no order within 6 compositions"
        )))
    }

    /// Sorted element orders.
    pub fn order_multiset(&self) -> Result<Vec<usize>> {
        let mut orders = AutomorphismId::ALL
            .iter()
            .map(|&id| self.order(id))
            .collect::<Result<Vec<_>>>()?;
        orders.sort_unstable();
        Ok(orders)
    }

    pub fn is_abelian(&self) -> bool {
        AutomorphismId::ALL.iter().all(|&i| {
            AutomorphismId::ALL
                .iter()
                .all(|&j| self.get(i, j) == self.get(j, i))
        })
    }

    /// Every row and every column is a permutation of the six ids.
    pub fn is_latin_square(&self) -> bool {
        let full = |ids: [AutomorphismId; 6]| {
            let mut seen = [false; 6];
            ids.iter().for_each(|id| seen[id.slot()] = true);
            seen.iter().all(|&s| s)
        };
        (0..6).all(|r| full(self.entries[r]))
            && (0..6).all(|c| full(std::array::from_fn(|r| self.entries[r][c])))
    }
}

pub fn group_table(p: PrimeModulus) -> Result<GroupTable> {
    let mut entries = [[AutomorphismId::IDENTITY; 6]; 6];
    for i in AutomorphismId::ALL {
        for j in AutomorphismId::ALL {
            entries[i.slot()][j.slot()] = compose(i, j, p)?;
        }
    }
    Ok(GroupTable { entries })
}

/// Builds the table at the smallest of `primes` and requires every other
/// prime to produce the same table.
pub fn group_table_across(primes: &[PrimeModulus]) -> Result<GroupTable> {
    let reference = primes
        .iter()
        .min()
        .ok_or_else(|| Error::InternalMismatch("no primes given".into()))?;
    let table = group_table(*reference)?;
    for &p in primes {
        if group_table(p)? != table {
            return Err(Error::InternalMismatch(format!(
                "composition table at p = {p} differs from p = {reference}"
            )));
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    fn id(n: u64) -> AutomorphismId {
        AutomorphismId::new(n).unwrap()
    }

    #[test]
    fn id_range() {
        assert!(AutomorphismId::new(0).is_err());
        assert!(AutomorphismId::new(7).is_err());
        assert_eq!("3".parse::<AutomorphismId>().unwrap(), id(3));
        assert!("x".parse::<AutomorphismId>().is_err());
    }

    #[test]
    fn images_of_v() {
        for m in [3, 5, 7, 11] {
            let m = p(m);
            assert_eq!(id(1).image_of_v(m), RingElement::v(m));
            assert_eq!(id(2).image_of_v(m).coefficients(), [0, m.get() - 1, 0]);
        }
        assert_eq!(id(3).image_of_v(p(5)).coefficients(), [1, 2, 1]);
    }

    #[test]
    fn images_distinct_for_each_prime() {
        for m in [3, 5, 7, 11, 13, 17] {
            let mut images: Vec<_> = AutomorphismId::ALL
                .iter()
                .map(|i| i.image_of_v(p(m)).index())
                .collect();
            images.sort_unstable();
            images.dedup();
            assert_eq!(images.len(), 6);
        }
    }

    #[test]
    fn closed_form_examples() {
        let m = p(5);
        for z in RingElement::all(m) {
            let [a, b, c] = z.coefficients();
            assert_eq!(id(2).apply(&z).coefficients(), [a, (5 - b) % 5, c]);
        }
        let v2 = RingElement::new(0, 0, 1, m).unwrap();
        assert_eq!(id(3).apply(&v2).coefficients(), [1, 3, 2]);
        let seven = RingElement::scalar(7, p(11));
        for i in AutomorphismId::ALL {
            assert_eq!(i.apply(&seven), seven);
        }
    }

    #[test]
    fn via_image_examples() {
        let m = p(5);
        let v = RingElement::v(m);
        let v2 = RingElement::new(0, 0, 1, m).unwrap();
        for z in RingElement::all(m) {
            assert_eq!(theta_apply_via_image(&v, &z).unwrap(), z);
        }
        assert_eq!(theta_apply_via_image(&v2, &v).unwrap(), v2);
        assert_eq!(theta_apply_via_image(&v2, &v2).unwrap(), v2);
        assert!(theta_apply_via_image(&RingElement::v(p(7)), &v).is_err());
    }

    #[test]
    fn census_at_five() {
        let cands = enumerate_endomorphism_candidates(p(5));
        assert_eq!(cands.len(), 27);
        assert_eq!(cands.iter().filter(|c| c.injective).count(), 6);
        for c in &cands {
            assert_eq!(c.injective, c.automorphism_id.is_some());
            assert_eq!(c.injective, c.collision.is_none());
            if let Some((z, w)) = c.collision {
                assert_ne!(z, w);
                assert_eq!(
                    theta_apply_via_image(&c.image_of_v, &z).unwrap(),
                    theta_apply_via_image(&c.image_of_v, &w).unwrap()
                );
            }
        }
        let indices: Vec<_> = cands.iter().map(|c| c.image_of_v.index()).collect();
        let mut sorted = indices.clone();
        sorted.sort_unstable();
        assert_eq!(indices, sorted);
    }

    #[test]
    fn bruteforce_at_three() {
        let m = p(3);
        let found = enumerate_automorphisms_bruteforce(m).unwrap();
        let mut expected: Vec<_> = AutomorphismId::ALL
            .iter()
            .map(|i| i.image_of_v(m))
            .collect();
        expected.sort_by_key(RingElement::index);
        let images: Vec<_> = found.iter().map(|(t, _)| *t).collect();
        assert_eq!(images, expected);
        let report = cross_check(m).unwrap();
        assert_eq!(
            report,
            OracleReport {
                candidates: 27,
                automorphisms: 6,
                non_injective: 21
            }
        );
    }

    #[test]
    fn composition_examples() {
        for m in [5, 7, 11] {
            let m = p(m);
            for j in AutomorphismId::ALL {
                assert_eq!(compose(id(1), j, m).unwrap(), j);
            }
            assert_eq!(compose(id(2), id(2), m).unwrap(), id(1));
            assert_eq!(compose(id(3), id(3), m).unwrap(), id(6));
        }
    }

    #[test]
    fn orders() {
        let expected = [1, 2, 3, 2, 2, 3];
        let table = group_table(p(5)).unwrap();
        for (i, want) in AutomorphismId::ALL.iter().zip(expected) {
            assert_eq!(i.order(), want);
            assert_eq!(table.order(*i).unwrap(), want);
        }
        assert_eq!(compose(id(3), id(6), p(5)).unwrap(), id(1));
    }

    #[test]
    fn table_shape() {
        let table = group_table_across(&[p(3), p(5), p(7), p(11), p(13)]).unwrap();
        assert!(table.is_latin_square());
        assert!(!table.is_abelian());
        assert_eq!(table.order_multiset().unwrap(), vec![1, 2, 2, 2, 3, 3]);
        for i in AutomorphismId::ALL {
            assert_eq!(table.get(AutomorphismId::IDENTITY, i), i);
            assert_eq!(table.get(i, AutomorphismId::IDENTITY), i);
        }
    }

    #[test]
    fn onto_witness_examples() {
        let m = p(5);
        assert!(onto_witness_theta3(0, 0, 0, m).is_zero());
        assert!(onto_witness_theta3(1, 0, 0, m).is_one());
        for z in RingElement::all(m) {
            let [x, y, w] = z.coefficients();
            assert_eq!(id(3).apply(&onto_witness_theta3(x, y, w, m)), z);
        }
    }

    #[test]
    fn apply_pow_wraps_by_order() {
        let m = p(7);
        let z = RingElement::new(3, 4, 5, m).unwrap();
        for i in AutomorphismId::ALL {
            assert_eq!(i.apply_pow(i.order(), &z), z);
            assert_eq!(i.apply_pow(1, &z), i.apply(&z));
            assert_eq!(i.apply_pow(i.order() + 1, &z), i.apply(&z));
        }
    }
}
