//! The (α,β)-plane: central charge, tilt slope, heart membership and the
//! minimal-rank semistability criterion.
//!
//! Points carry α² rather than α, so every wall intersection and hole is an
//! exact rational datum; α itself is usually irrational.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, rat_str, Int, Rat};
use crate::mukai::MukaiVector;

/// A point `(β, α²)` of the upper half plane, `α² > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabPoint {
    beta: Rat,
    alpha_sq: Rat,
}

impl StabPoint {
    pub fn new(beta: Rat, alpha_sq: Rat) -> Result<Self> {
        if !alpha_sq.is_positive() {
            return Err(Error::NonPositiveAlphaSq(rat_str(&alpha_sq)));
        }
        Ok(StabPoint { beta, alpha_sq })
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }

    pub fn alpha_sq(&self) -> &Rat {
        &self.alpha_sq
    }
}

/// Value of the central charge, split into exact real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeValue {
    pub re: Rat,
    pub im: Rat,
}

impl ChargeValue {
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// `Z_{α,β}(v) = −(s − β·L²·c + (β²−α²)/2·L²·r) + i·L²·(c − β·r)`.
pub fn central_charge(v: &MukaiVector, p: &StabPoint) -> ChargeValue {
    let l2 = Rat::from_integer(v.surface().lsquare_int());
    let r = Rat::from_integer(v.r().clone());
    let c = Rat::from_integer(v.c().clone());
    let s = Rat::from_integer(v.s().clone());
    let beta = &p.beta;
    let half = Rat::new(int(1), int(2));
    let quad = (beta * beta - &p.alpha_sq) * half * &l2 * &r;
    let re = -(&s - beta * &l2 * &c + quad);
    let im = &l2 * (&c - beta * &r);
    ChargeValue { re, im }
}

/// Tilt slope `ν = −Re Z / Im Z`, or `+∞` on the `Im Z = 0` boundary of the
/// heart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TiltSlope {
    Finite(Rat),
    Infinite,
}

/// Computes the tilt slope of `v` at `p`.
///
/// Errors when the class sits outside the heart at `p` (`Im Z = 0`, `Re Z ≥ 0`)
/// or when the charge vanishes entirely (the hole of a spherical class).
pub fn tilt_slope(v: &MukaiVector, p: &StabPoint) -> Result<TiltSlope> {
    let z = central_charge(v, p);
    if z.im.is_zero() {
        if z.is_zero() {
            return Err(Error::ChargeVanishes(v.to_string()));
        }
        if z.re.is_negative() {
            return Ok(TiltSlope::Infinite);
        }
        return Err(Error::OutsideHeart);
    }
    Ok(TiltSlope::Finite(-&z.re / &z.im))
}

/// Where a μ_L-stable class sits relative to the heart at slope-parameter β.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeartMembership {
    /// The sheaf itself lies in `Coh^β`.
    SheafInHeart,
    /// The shift by `[1]` lies in `Coh^β`.
    ShiftInHeart,
    /// Nothing can be concluded (the μ-stability flag was not asserted).
    Neither,
}

/// Decides heart membership for a class asserted to come from a μ_L-stable
/// sheaf. Rank 0 classes are torsion, hence always in the heart. Negative
/// rank is read as an already-shifted sheaf of class `−v`; the answer still
/// refers to the underlying sheaf, so the flip happens at `β = c/r` in every
/// rank-nonzero case.
pub fn heart_membership(v: &MukaiVector, mu_stable: bool, beta: &Rat) -> HeartMembership {
    if !mu_stable {
        return HeartMembership::Neither;
    }
    if v.r().is_zero() {
        return HeartMembership::SheafInHeart;
    }
    let slope = Rat::new(v.c().clone(), v.r().clone());
    if beta < &slope {
        HeartMembership::SheafInHeart
    } else {
        HeartMembership::ShiftInHeart
    }
}

/// Minimal-rank criterion at `β₀ = a/b` in lowest terms: the imaginary part
/// `L²·|c·b − a·r|/b` equals its smallest positive quantum `L²/b` exactly when
/// `|c·b − a·r| = 1`. Classes passing it are semistable for every `α` on the
/// line `β = β₀` as soon as they are semistable for one.
pub fn minimal_rank_criterion(v: &MukaiVector, beta0: &Rat) -> bool {
    let a = beta0.numer();
    let b = beta0.denom();
    let quantum: Int = (v.c() * b - a * v.r()).abs();
    quantum == int(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::mukai::PolarizedK3;

    fn v(g: u32, r: i64, c: i64, s: i64) -> MukaiVector {
        MukaiVector::new(PolarizedK3::new(g).unwrap(), r, c, s)
    }

    fn pt(beta: Rat, alpha_sq: Rat) -> StabPoint {
        StabPoint::new(beta, alpha_sq).unwrap()
    }

    #[test]
    fn points_need_positive_alpha_sq() {
        assert!(StabPoint::new(rat(0, 1), rat(0, 1)).is_err());
        assert!(StabPoint::new(rat(0, 1), rat(-1, 4)).is_err());
    }

    #[test]
    fn charge_on_the_genus7_wall() {
        let p = pt(rat(-2, 5), rat(1, 150));
        let zi = central_charge(&v(7, 1, 0, -1), &p);
        assert_eq!(zi.im, rat(24, 5));
        assert_eq!(zi.re, rat(2, 25));
        let zw = central_charge(&v(7, -2, 1, -3), &p);
        // both charges are aligned exactly on the wall
        assert_eq!(&zi.re * &zw.im - &zw.re * &zi.im, rat(0, 1));
    }

    #[test]
    fn torsion_charge_has_constant_imaginary_part() {
        let p = pt(rat(3, 7), rat(5, 11));
        let z = central_charge(&v(7, 0, 1, 4), &p);
        assert_eq!(z.im, rat(12, 1));
    }

    #[test]
    fn hole_point_kills_the_charge() {
        let p = pt(rat(-2, 5), rat(1, 150));
        let z = central_charge(&v(7, 5, -2, 5), &p);
        assert!(z.is_zero());
        assert!(matches!(
            tilt_slope(&v(7, 5, -2, 5), &p),
            Err(Error::ChargeVanishes(_))
        ));
    }

    #[test]
    fn slopes_agree_on_the_wall() {
        // the genus-7 wall crosses β = −3/7 at α² = 1/147
        let p = pt(rat(-3, 7), rat(1, 147));
        let a = tilt_slope(&v(7, 1, 0, -1), &p).unwrap();
        let b = tilt_slope(&v(7, -2, 1, -3), &p).unwrap();
        assert_eq!(a, b);

        // genus 8: the wall crosses β = −1/3 at α² = 2/63
        let p = pt(rat(-1, 3), rat(2, 63));
        let a = tilt_slope(&v(8, 1, 0, -1), &p).unwrap();
        let b = tilt_slope(&v(8, -2, 1, -4), &p).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn torsion_slope_is_always_finite() {
        let p = pt(rat(-9, 4), rat(7, 3));
        assert!(matches!(
            tilt_slope(&v(7, 0, 1, 2), &p).unwrap(),
            TiltSlope::Finite(_)
        ));
    }

    #[test]
    fn outside_heart_is_an_error() {
        // rank > 0 on its own vertical line: Im Z = 0 and Re Z = α²·L²·r/2 > 0
        let p = pt(rat(0, 1), rat(1, 1));
        assert!(matches!(
            tilt_slope(&v(7, 1, 0, 0), &p),
            Err(Error::OutsideHeart)
        ));
    }

    #[test]
    fn heart_membership_cases() {
        assert_eq!(
            heart_membership(&v(7, 2, -1, 3), true, &rat(-1, 3)),
            HeartMembership::ShiftInHeart
        );
        assert_eq!(
            heart_membership(&v(7, 1, 0, -1), true, &rat(-1, 2)),
            HeartMembership::SheafInHeart
        );
        assert_eq!(
            heart_membership(&v(7, 1, 0, -1), true, &rat(1, 3)),
            HeartMembership::ShiftInHeart
        );
        assert_eq!(
            heart_membership(&v(7, 0, 1, 5), true, &rat(9, 2)),
            HeartMembership::SheafInHeart
        );
        assert_eq!(
            heart_membership(&v(7, 1, 0, -1), false, &rat(-1, 2)),
            HeartMembership::Neither
        );
    }

    #[test]
    fn minimal_rank_examples() {
        assert!(minimal_rank_criterion(&v(7, 1, 0, -1), &rat(-1, 2)));
        assert!(minimal_rank_criterion(&v(7, -2, 1, -3), &rat(-3, 7)));
        assert!(!minimal_rank_criterion(&v(7, 2, 1, 3), &rat(-1, 2)));
    }
}
