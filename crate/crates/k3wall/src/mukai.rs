//! The Mukai lattice of a Picard-rank-1 polarized K3 surface.
//!
//! A class is an integer triple `(r, c, s)` standing for `(r, c·L, s)` in
//! `Z ⊕ Z·L ⊕ Z`, where `L` is the primitive polarization and `L² = 2g − 2`.
//! The pairing is `⟨v, w⟩ = c_v·c_w·L² − r_v·s_w − r_w·s_v = −χ(v, w)`.

use std::fmt;

use num::{Integer, One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, rat_ceil, rat_floor, Int, Rat};

/// A polarized K3 surface of genus `g ≥ 2` with `Pic = Z·L` and `L² = 2g − 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolarizedK3 {
    genus: u32,
}

impl PolarizedK3 {
    pub fn new(genus: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::InvalidGenus(genus));
        }
        Ok(PolarizedK3 { genus })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// L² = 2g − 2.
    pub fn lsquare(&self) -> i64 {
        2 * i64::from(self.genus) - 2
    }

    pub fn lsquare_int(&self) -> Int {
        int(self.lsquare())
    }
}

/// Slope `μ_L = c/r`, with the convention `+∞` for rank 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slope {
    Finite(Rat),
    Infinite,
}

/// A Mukai vector `(r, c, s)` on a fixed surface.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MukaiVector {
    surface: PolarizedK3,
    r: Int,
    c: Int,
    s: Int,
}

impl fmt::Debug for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ g={}", self, self.surface.genus())
    }
}

impl fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.s)
    }
}

impl MukaiVector {
    pub fn new(surface: PolarizedK3, r: impl Into<Int>, c: impl Into<Int>, s: impl Into<Int>) -> Self {
        MukaiVector {
            surface,
            r: r.into(),
            c: c.into(),
            s: s.into(),
        }
    }

    /// Parses `r,c,s` (an optional surrounding parenthesis pair is accepted).
    pub fn parse(surface: PolarizedK3, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let offset = trimmed.len() - trimmed.trim_start().len();
        let mut parts = Vec::new();
        let mut pos = offset;
        for piece in inner.split(',') {
            let val: Int = piece.trim().parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("expected an integer component, found {:?}", piece.trim()),
            })?;
            parts.push(val);
            pos += piece.len() + 1;
        }
        if parts.len() != 3 {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("a Mukai vector has 3 components, found {}", parts.len()),
            });
        }
        let mut it = parts.into_iter();
        Ok(MukaiVector {
            surface,
            r: it.next().unwrap(),
            c: it.next().unwrap(),
            s: it.next().unwrap(),
        })
    }

    pub fn surface(&self) -> PolarizedK3 {
        self.surface
    }

    pub fn r(&self) -> &Int {
        &self.r
    }

    pub fn c(&self) -> &Int {
        &self.c
    }

    pub fn s(&self) -> &Int {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.c.is_zero() && self.s.is_zero()
    }

    fn check_same_surface(&self, other: &Self) -> Result<()> {
        if self.surface != other.surface {
            return Err(Error::LatticeMismatch(
                self.surface.genus(),
                other.surface.genus(),
            ));
        }
        Ok(())
    }

    /// Mukai pairing `⟨v, w⟩ = c_v·c_w·L² − r_v·s_w − r_w·s_v`.
    pub fn pairing(&self, other: &Self) -> Result<Int> {
        self.check_same_surface(other)?;
        let l2 = self.surface.lsquare_int();
        Ok(&self.c * &other.c * l2 - &self.r * &other.s - &other.r * &self.s)
    }

    /// Euler pairing `χ(v, w) = −⟨v, w⟩`.
    pub fn euler_characteristic(&self, other: &Self) -> Result<Int> {
        Ok(-self.pairing(other)?)
    }

    /// `v² = ⟨v, v⟩`; always even.
    pub fn self_pairing(&self) -> Int {
        let sq = self.pairing(self).expect("same surface");
        debug_assert!(sq.is_even());
        sq
    }

    /// A class is spherical when `v² = −2`.
    pub fn is_spherical(&self) -> bool {
        self.self_pairing() == int(-2)
    }

    /// gcd(r, c, s) = 1. The zero vector is not primitive.
    pub fn is_primitive(&self) -> bool {
        let g = self.r.gcd(&self.c).gcd(&self.s);
        g.is_one()
    }

    /// Dimension `v² + 2` of the moduli space of stable objects of class `v`,
    /// or `None` when `v² < −2` and the space is empty. Requires `v` primitive.
    pub fn moduli_dimension(&self) -> Result<Option<Int>> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive(self.to_string()));
        }
        let sq = self.self_pairing();
        if sq < int(-2) {
            Ok(None)
        } else {
            Ok(Some(sq + int(2)))
        }
    }

    /// `μ_L = c/r`, or `+∞` for rank 0.
    pub fn slope(&self) -> Slope {
        if self.r.is_zero() {
            Slope::Infinite
        } else {
            Slope::Finite(Rat::new(self.c.clone(), self.r.clone()))
        }
    }

    /// Class of the derived dual: `(r, −c, s)`.
    pub fn dual(&self) -> Self {
        MukaiVector {
            surface: self.surface,
            r: self.r.clone(),
            c: -&self.c,
            s: self.s.clone(),
        }
    }

    /// Class of the shift `[1]`: `−v`.
    pub fn shift(&self) -> Self {
        MukaiVector {
            surface: self.surface,
            r: -&self.r,
            c: -&self.c,
            s: -&self.s,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_surface(other)?;
        Ok(MukaiVector {
            surface: self.surface,
            r: &self.r + &other.r,
            c: &self.c + &other.c,
            s: &self.s + &other.s,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.shift())
    }

    pub fn is_proportional_to(&self, other: &Self) -> bool {
        let cross_rc = &self.r * &other.c - &other.r * &self.c;
        let cross_rs = &self.r * &other.s - &other.r * &self.s;
        let cross_cs = &self.c * &other.s - &other.c * &self.s;
        cross_rc.is_zero() && cross_rs.is_zero() && cross_cs.is_zero()
    }
}

/// All spherical classes `(r, c, s)` with `1 ≤ r ≤ r_max` and slope `c/r`
/// strictly inside the open window. Sphericity forces
/// `s = ((g−1)c² + 1)/r`, so a class exists exactly when `r` divides
/// `(g−1)c² + 1`. Sorted by `(r, c)`.
pub fn spherical_enumerate(
    surface: PolarizedK3,
    r_max: u32,
    window: (&Rat, &Rat),
) -> Result<Vec<MukaiVector>> {
    if r_max < 1 {
        return Err(Error::RankBoundTooSmall);
    }
    let (lo, hi) = window;
    let mut found = Vec::new();
    if lo >= hi {
        return Ok(found);
    }
    let g_minus_1 = int(i64::from(surface.genus()) - 1);
    for r in 1..=i64::from(r_max) {
        let rank = int(r);
        let c_lo: Int = rat_floor(&(lo * Rat::from_integer(rank.clone()))) - 1;
        let c_hi: Int = rat_ceil(&(hi * Rat::from_integer(rank.clone()))) + 1;
        let mut c = c_lo;
        while c <= c_hi {
            let slope = Rat::new(c.clone(), rank.clone());
            if &slope > lo && &slope < hi {
                let numerator: Int = &g_minus_1 * &c * &c + 1;
                let (q, rem) = numerator.div_rem(&rank);
                if rem.is_zero() {
                    found.push(MukaiVector::new(surface, rank.clone(), c.clone(), q));
                }
            }
            c += 1;
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn k3(g: u32) -> PolarizedK3 {
        PolarizedK3::new(g).unwrap()
    }

    fn v(g: u32, r: i64, c: i64, s: i64) -> MukaiVector {
        MukaiVector::new(k3(g), r, c, s)
    }

    #[test]
    fn genus_validation() {
        assert!(PolarizedK3::new(1).is_err());
        assert_eq!(k3(7).lsquare(), 12);
    }

    #[test]
    fn pairing_values() {
        assert_eq!(v(7, 2, 1, 3).pairing(&v(7, 2, 1, 3)).unwrap(), int(0));
        assert_eq!(v(7, -2, 1, -3).pairing(&v(7, 5, -2, 5)).unwrap(), int(1));
        assert_eq!(v(9, 1, 0, 1).pairing(&v(9, 1, 0, 1)).unwrap(), int(-2));
    }

    #[test]
    fn pairing_rejects_mixed_surfaces() {
        let err = v(7, 1, 0, 1).pairing(&v(9, 1, 0, 1)).unwrap_err();
        assert!(matches!(err, Error::LatticeMismatch(7, 9)));
    }

    #[test]
    fn euler_characteristic_values() {
        assert_eq!(
            v(7, 1, 0, 1).euler_characteristic(&v(7, 2, 1, 3)).unwrap(),
            int(5)
        );
        assert_eq!(
            v(12, 1, 0, 1).euler_characteristic(&v(12, 2, 1, 6)).unwrap(),
            int(8)
        );
    }

    #[test]
    fn sphericity() {
        assert!(v(7, 5, -2, 5).is_spherical());
        assert!(v(11, 7, -4, 23).is_spherical());
        assert!(!v(9, 1, 0, -1).is_spherical());
    }

    #[test]
    fn moduli_dimension_cases() {
        assert_eq!(v(9, 2, 1, 4).moduli_dimension().unwrap(), Some(int(2)));
        assert_eq!(v(7, 5, -2, 5).moduli_dimension().unwrap(), Some(int(0)));
        assert_eq!(v(7, 4, 1, 4).moduli_dimension().unwrap(), None);
        assert!(matches!(
            v(7, 2, 0, 2).moduli_dimension(),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn slopes() {
        assert_eq!(v(7, 2, 1, 3).slope(), Slope::Finite(rat(1, 2)));
        assert_eq!(v(7, -2, 1, -3).slope(), Slope::Finite(rat(-1, 2)));
        assert_eq!(v(7, 0, 1, 4).slope(), Slope::Infinite);
    }

    #[test]
    fn dual_and_shift() {
        let e = v(7, 2, 1, 3);
        assert_eq!(e.dual().shift(), v(7, -2, 1, -3));
        assert_eq!(e.dual().dual(), e);
        assert_eq!(e.shift().shift(), e);
    }

    #[test]
    fn enumerate_finds_the_hole_classes() {
        let g7 = spherical_enumerate(k3(7), 7, (&rat(-1, 2), &rat(-1, 3))).unwrap();
        assert_eq!(g7, vec![v(7, 5, -2, 5)]);

        let g11 = spherical_enumerate(k3(11), 7, (&rat(-1, 2), &rat(-2, 5))).unwrap();
        assert_eq!(g11, vec![v(11, 7, -3, 13)]);

        let g9 = spherical_enumerate(k3(9), 3, (&rat(-1, 2), &rat(-1, 4))).unwrap();
        assert_eq!(g9, vec![v(9, 3, -1, 3)]);
    }

    #[test]
    fn enumerate_empty_window_is_empty() {
        assert!(spherical_enumerate(k3(7), 5, (&rat(1, 2), &rat(1, 2)))
            .unwrap()
            .is_empty());
        assert!(matches!(
            spherical_enumerate(k3(7), 0, (&rat(-1, 1), &rat(0, 1))),
            Err(Error::RankBoundTooSmall)
        ));
    }

    #[test]
    fn vector_parsing() {
        let s = k3(7);
        assert_eq!(MukaiVector::parse(s, "1,0,-1").unwrap(), v(7, 1, 0, -1));
        assert_eq!(MukaiVector::parse(s, "(5, -2, 5)").unwrap(), v(7, 5, -2, 5));
        assert!(MukaiVector::parse(s, "1,0").is_err());
        assert!(MukaiVector::parse(s, "1,x,3").is_err());
    }
}
