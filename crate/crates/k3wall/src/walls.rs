//! Numerical walls in the (α,β)-plane.
//!
//! The wall between non-proportional classes `v`, `w` is the locus
//! `ν(v) = ν(w)`, which unwinds to the master equation
//! `−(L²/2)·D·(α²+β²) + B·β + C = 0` with minors
//! `D = c_v·r_w − c_w·r_v`, `B = s_v·r_w − s_w·r_v`, `C = s_w·c_v − s_v·c_w`.
//! Every wall is a semicircle centered on the β-axis or a vertical line;
//! the coefficients are stored as a reduced primitive integer triple, so
//! equality of walls is literal equality of equations.

use std::fmt;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, normalize_coeffs, rat_ceil, rat_floor, rat_str, Int, Rat};
use crate::mukai::MukaiVector;
use crate::tilt::StabPoint;

/// Reduced integer equation `A(α²+β²) + Bβ + C = 0` of a numerical wall.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallEquation {
    pub quad: Int,
    pub lin: Int,
    pub constant: Int,
}

impl WallEquation {
    /// Exact value of the left-hand side at `(β, α²)`.
    pub fn evaluate(&self, beta: &Rat, alpha_sq: &Rat) -> Rat {
        let a = Rat::from_integer(self.quad.clone());
        let b = Rat::from_integer(self.lin.clone());
        let c = Rat::from_integer(self.constant.clone());
        a * (alpha_sq + beta * beta) + b * beta + c
    }
}

fn coeff(prefix: &str, value: &Int) -> String {
    if value == &int(1) {
        prefix.to_string()
    } else if value == &int(-1) {
        format!("-{prefix}")
    } else {
        format!("{value}{prefix}")
    }
}

impl fmt::Display for WallEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if !self.quad.is_zero() {
            out.push_str(&coeff("(α²+β²)", &self.quad));
        }
        if !self.lin.is_zero() {
            if !out.is_empty() && self.lin.is_positive() {
                out.push('+');
            }
            out.push_str(&coeff("β", &self.lin));
        }
        if !self.constant.is_zero() {
            if !out.is_empty() && self.constant.is_positive() {
                out.push('+');
            }
            out.push_str(&self.constant.to_string());
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}=0")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WallKind {
    Semicircle { center: Rat, radius_sq: Rat },
    Vertical { beta: Rat },
    /// The equation has no solution with α > 0.
    Degenerate,
}

impl WallKind {
    pub fn name(&self) -> &'static str {
        match self {
            WallKind::Semicircle { .. } => "semicircle",
            WallKind::Vertical { .. } => "vertical",
            WallKind::Degenerate => "degenerate",
        }
    }
}

/// Endpoints of a semicircular wall on the β-axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WallEndpoints {
    Rational(Rat, Rat),
    /// The restriction to α = 0 has irrational roots; the reduced integer
    /// quadratic `q0·β² + q1·β + q2 = 0` is returned instead.
    Irrational { quadratic: (Int, Int, Int) },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalWall {
    kind: WallKind,
    eq: WallEquation,
    pair: (MukaiVector, MukaiVector),
}

impl NumericalWall {
    pub fn kind(&self) -> &WallKind {
        &self.kind
    }

    pub fn equation(&self) -> &WallEquation {
        &self.eq
    }

    pub fn pair(&self) -> (&MukaiVector, &MukaiVector) {
        (&self.pair.0, &self.pair.1)
    }

    /// Two walls describe the same locus iff their reduced equations agree.
    pub fn same_locus(&self, other: &NumericalWall) -> bool {
        self.eq == other.eq
    }

    pub fn contains(&self, p: &StabPoint) -> bool {
        self.eq.evaluate(p.beta(), p.alpha_sq()).is_zero()
    }

    /// β-coordinates of the intersection with α = 0, exact when rational.
    pub fn endpoints(&self) -> Result<WallEndpoints> {
        let WallKind::Semicircle { center, radius_sq } = &self.kind else {
            return Err(Error::NotSemicircular(self.kind.name()));
        };
        match rational_sqrt(radius_sq) {
            Some(radius) => Ok(WallEndpoints::Rational(center - &radius, center + &radius)),
            None => Ok(WallEndpoints::Irrational {
                quadratic: (
                    self.eq.quad.clone(),
                    self.eq.lin.clone(),
                    self.eq.constant.clone(),
                ),
            }),
        }
    }

    /// Highest point `(center, α² = radius²)` of a semicircular wall.
    pub fn top_point(&self) -> Result<StabPoint> {
        let WallKind::Semicircle { center, radius_sq } = &self.kind else {
            return Err(Error::NotSemicircular(self.kind.name()));
        };
        StabPoint::new(center.clone(), radius_sq.clone())
    }
}

/// Square root of a nonnegative rational, when it is rational.
fn rational_sqrt(value: &Rat) -> Option<Rat> {
    if value.is_negative() {
        return None;
    }
    let num_root = value.numer().sqrt();
    let den_root = value.denom().sqrt();
    if &(&num_root * &num_root) == value.numer() && &(&den_root * &den_root) == value.denom() {
        Some(Rat::new(num_root, den_root))
    } else {
        None
    }
}

/// The numerical wall `ν(v) = ν(w)`.
pub fn wall_between(v: &MukaiVector, w: &MukaiVector) -> Result<NumericalWall> {
    if v.surface() != w.surface() {
        return Err(Error::LatticeMismatch(
            v.surface().genus(),
            w.surface().genus(),
        ));
    }
    if v.is_proportional_to(w) {
        return Err(Error::ProportionalVectors(v.to_string(), w.to_string()));
    }
    let half_l2 = int(v.surface().lsquare() / 2);
    let d = v.c() * w.r() - w.c() * v.r();
    let b = v.s() * w.r() - w.s() * v.r();
    let c = w.s() * v.c() - v.s() * w.c();
    let mut coeffs = [-(&half_l2 * &d), b, c];
    normalize_coeffs(&mut coeffs);
    let [quad, lin, constant] = coeffs;
    let eq = WallEquation {
        quad,
        lin,
        constant,
    };

    let kind = if !eq.quad.is_zero() {
        let two_quad = Rat::from_integer(&eq.quad * 2);
        let center = Rat::from_integer(-&eq.lin) / &two_quad;
        let radius_sq =
            &center * &center - Rat::new(eq.constant.clone(), eq.quad.clone());
        if radius_sq.is_positive() {
            WallKind::Semicircle { center, radius_sq }
        } else {
            WallKind::Degenerate
        }
    } else if !eq.lin.is_zero() {
        WallKind::Vertical {
            beta: Rat::new(-&eq.constant, eq.lin.clone()),
        }
    } else {
        WallKind::Degenerate
    };

    Ok(NumericalWall {
        kind,
        eq,
        pair: (v.clone(), w.clone()),
    })
}

/// The distinguished vertical wall `β = c/r` attached to a class of nonzero
/// rank (the unique vertical numerical wall through any of its pairings).
pub fn vertical_wall_line(v: &MukaiVector) -> Option<Rat> {
    if v.r().is_zero() {
        None
    } else {
        Some(Rat::new(v.c().clone(), v.r().clone()))
    }
}

/// A hole of the stability plane: a spherical class together with the point
/// where its central charge vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hole {
    pub delta: MukaiVector,
    pub point: StabPoint,
}

/// The point `(β, α²) = (c/r, 2s/(L²r) − c²/r²)` where `Z(v) = 0`, when it
/// exists in the upper half plane. Since `α² = −v²/(L²r²)`, this needs
/// exactly `r ≠ 0` and `v² < 0`.
pub fn charge_vanishing_point(v: &MukaiVector) -> Option<StabPoint> {
    if v.r().is_zero() {
        return None;
    }
    let l2 = Rat::from_integer(v.surface().lsquare_int());
    let r = Rat::from_integer(v.r().clone());
    let c = Rat::from_integer(v.c().clone());
    let s = Rat::from_integer(v.s().clone());
    let beta = &c / &r;
    let alpha_sq = Rat::from_integer(int(2)) * &s / (&l2 * &r) - &beta * &beta;
    StabPoint::new(beta, alpha_sq).ok()
}

/// All spherical classes with rank in `1..=r_max` whose charge-vanishing
/// point lies on the wall, sorted by `(r, c)`.
pub fn holes_on_wall(wall: &NumericalWall, r_max: u32) -> Vec<Hole> {
    let surface = wall.pair.0.surface();
    let g_minus_1 = int(i64::from(surface.genus()) - 1);
    let mut holes = Vec::new();

    let mut consider = |r: &Int, c: Int| {
        let numerator: Int = &g_minus_1 * &c * &c + 1;
        let (s, rem) = num::Integer::div_rem(&numerator, r);
        if !rem.is_zero() {
            return;
        }
        let delta = MukaiVector::new(surface, r.clone(), c, s);
        debug_assert!(delta.is_spherical());
        if let Some(point) = charge_vanishing_point(&delta) {
            if wall.contains(&point) {
                holes.push(Hole { delta, point });
            }
        }
    };

    match &wall.kind {
        WallKind::Degenerate => {}
        WallKind::Vertical { beta } => {
            for r in 1..=i64::from(r_max) {
                let rank = int(r);
                // slope c/r must equal the line position exactly
                let c_exact = beta * Rat::from_integer(rank.clone());
                if c_exact.denom() == &int(1) {
                    consider(&rank, c_exact.numer().clone());
                }
            }
        }
        WallKind::Semicircle { center, radius_sq } => {
            for r in 1..=i64::from(r_max) {
                let rank = int(r);
                let rank_rat = Rat::from_integer(rank.clone());
                let mid = center * &rank_rat;
                // |c − r·center| < r·√(radius²); bound the loop by an integer
                // over-approximation of the irrational width, test exactly.
                let width_sq = radius_sq * &rank_rat * &rank_rat;
                let width: Int = rat_ceil(&width_sq).sqrt() + 1;
                let mut c: Int = rat_floor(&mid) - &width;
                let c_hi: Int = rat_ceil(&mid) + &width;
                while c <= c_hi {
                    let offset = Rat::new(c.clone(), rank.clone()) - center;
                    if &(&offset * &offset) < radius_sq {
                        consider(&rank, c.clone());
                    }
                    c += 1;
                }
            }
        }
    }
    holes
}

/// Shape of the curve `ν(v) = 0`, classified by the sign data `(r, v²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuZeroShape {
    Hyperbola,
    PairOfLines,
    Parabola,
    VerticalLine,
}

impl NuZeroShape {
    pub fn name(&self) -> &'static str {
        match self {
            NuZeroShape::Hyperbola => "hyperbola",
            NuZeroShape::PairOfLines => "pair_of_lines",
            NuZeroShape::Parabola => "parabola",
            NuZeroShape::VerticalLine => "vertical_line",
        }
    }
}

/// The curve `Re Z(v) = 0` as a reduced integer quadric
/// `q_β·β² + q_α·α² + l·β + k = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuZeroCurve {
    pub shape: NuZeroShape,
    pub quad_beta: Int,
    pub quad_alpha: Int,
    pub lin_beta: Int,
    pub constant: Int,
}

impl NuZeroCurve {
    pub fn evaluate(&self, beta: &Rat, alpha_sq: &Rat) -> Rat {
        Rat::from_integer(self.quad_beta.clone()) * beta * beta
            + Rat::from_integer(self.quad_alpha.clone()) * alpha_sq
            + Rat::from_integer(self.lin_beta.clone()) * beta
            + Rat::from_integer(self.constant.clone())
    }

    pub fn contains(&self, p: &StabPoint) -> bool {
        self.evaluate(p.beta(), p.alpha_sq()).is_zero()
    }

    /// Solves for α² at a given β when the quadric depends on α.
    pub fn alpha_sq_at(&self, beta: &Rat) -> Option<Rat> {
        if self.quad_alpha.is_zero() {
            return None;
        }
        let rest = Rat::from_integer(self.quad_beta.clone()) * beta * beta
            + Rat::from_integer(self.lin_beta.clone()) * beta
            + Rat::from_integer(self.constant.clone());
        Some(-rest / Rat::from_integer(self.quad_alpha.clone()))
    }

    /// Position of the locus when it is a vertical line.
    pub fn vertical_position(&self) -> Option<Rat> {
        if self.quad_alpha.is_zero() && self.quad_beta.is_zero() && !self.lin_beta.is_zero() {
            Some(Rat::new(-&self.constant, self.lin_beta.clone()))
        } else {
            None
        }
    }
}

/// The curve `H_v: ν(v) = 0`, i.e. `Re Z(v) = 0`:
/// `(L²r/2)(β² − α²) − L²c·β + s = 0`.
pub fn nu_zero_curve(v: &MukaiVector) -> NuZeroCurve {
    let half_l2 = int(v.surface().lsquare() / 2);
    let l2 = v.surface().lsquare_int();
    let mut coeffs = [
        &half_l2 * v.r(),
        -(&half_l2 * v.r()),
        -(&l2 * v.c()),
        v.s().clone(),
    ];
    normalize_coeffs(&mut coeffs);
    let [quad_beta, quad_alpha, lin_beta, constant] = coeffs;
    let shape = if v.r().is_zero() {
        NuZeroShape::VerticalLine
    } else {
        let sq = v.self_pairing();
        if sq.is_positive() {
            NuZeroShape::Hyperbola
        } else if sq.is_zero() {
            NuZeroShape::PairOfLines
        } else {
            NuZeroShape::Parabola
        }
    };
    NuZeroCurve {
        shape,
        quad_beta,
        quad_alpha,
        lin_beta,
        constant,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NestingRelation {
    Equal,
    Nested1In2,
    Nested2In1,
    Disjoint,
    Crossing,
}

/// Exact circle comparison of two semicircular walls of the same class.
/// Tangencies at α = 0 count as nested/disjoint: the open upper semicircles
/// share no point there.
pub fn nesting_relation(w1: &NumericalWall, w2: &NumericalWall) -> Result<NestingRelation> {
    let WallKind::Semicircle {
        center: b1,
        radius_sq: r1,
    } = &w1.kind
    else {
        return Err(Error::NotSemicircular(w1.kind.name()));
    };
    let WallKind::Semicircle {
        center: b2,
        radius_sq: r2,
    } = &w2.kind
    else {
        return Err(Error::NotSemicircular(w2.kind.name()));
    };
    if w1.pair.0 != w2.pair.0 {
        return Err(Error::WallPairMismatch);
    }
    if b1 == b2 && r1 == r2 {
        return Ok(NestingRelation::Equal);
    }
    let d = b1 - b2;
    let dist_sq = &d * &d;
    let s = &dist_sq - r1 - r2;
    let s_sq = &s * &s;
    let t = Rat::from_integer(int(4)) * r1 * r2;
    if s_sq < t {
        Ok(NestingRelation::Crossing)
    } else if s.is_negative() {
        if r1 < r2 {
            Ok(NestingRelation::Nested1In2)
        } else {
            Ok(NestingRelation::Nested2In1)
        }
    } else {
        Ok(NestingRelation::Disjoint)
    }
}

/// For `v² < 0`, every wall of `v` passes through the single point where
/// `Z(v) = 0`. Returns that point after checking it against the wall of
/// `v` with each sample class; a miss signals an arithmetic bug.
pub fn common_point_check(v: &MukaiVector, samples: &[MukaiVector]) -> Result<StabPoint> {
    if v.self_pairing() >= int(0) {
        return Err(Error::NotNegativeSquare(v.to_string()));
    }
    let point = charge_vanishing_point(v).expect("negative square implies a vanishing point");
    for w in samples {
        let wall = wall_between(v, w)?;
        if !wall.contains(&point) {
            return Err(Error::CommonPointViolation {
                pair: format!("({v}, {w})"),
                beta: rat_str(point.beta()),
                alpha_sq: rat_str(point.alpha_sq()),
            });
        }
    }
    Ok(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::mukai::PolarizedK3;

    fn v(g: u32, r: i64, c: i64, s: i64) -> MukaiVector {
        MukaiVector::new(PolarizedK3::new(g).unwrap(), r, c, s)
    }

    #[test]
    fn genus7_wall_equation() {
        let wall = wall_between(&v(7, 1, 0, -1), &v(7, -2, 1, -3)).unwrap();
        assert_eq!(wall.equation().to_string(), "6(α²+β²)+5β+1=0");
        let WallKind::Semicircle { center, radius_sq } = wall.kind() else {
            panic!("expected a semicircle");
        };
        assert_eq!(center, &rat(-5, 12));
        assert_eq!(radius_sq, &rat(1, 144));
        assert_eq!(
            wall.endpoints().unwrap(),
            WallEndpoints::Rational(rat(-1, 2), rat(-1, 3))
        );
        let top = wall.top_point().unwrap();
        assert_eq!(top.beta(), &rat(-5, 12));
        assert_eq!(top.alpha_sq(), &rat(1, 144));
    }

    #[test]
    fn endpoint_table() {
        let w9 = wall_between(&v(9, 1, 0, -1), &v(9, -2, 1, -4)).unwrap();
        assert_eq!(
            w9.endpoints().unwrap(),
            WallEndpoints::Rational(rat(-1, 2), rat(-1, 4))
        );
        let w11 = wall_between(&v(11, 1, 0, -2), &v(11, -2, 1, -5)).unwrap();
        assert_eq!(
            w11.endpoints().unwrap(),
            WallEndpoints::Rational(rat(-1, 2), rat(-2, 5))
        );
        let w11b = wall_between(&v(11, 2, -1, 5), &v(11, 1, 0, -3)).unwrap();
        assert_eq!(
            w11b.endpoints().unwrap(),
            WallEndpoints::Rational(rat(-3, 5), rat(-1, 2))
        );
    }

    #[test]
    fn irrational_endpoints_return_the_quadratic() {
        let wall = wall_between(&v(8, 1, 0, -1), &v(8, -2, 1, -4)).unwrap();
        assert_eq!(wall.equation().to_string(), "7(α²+β²)+6β+1=0");
        assert_eq!(
            wall.endpoints().unwrap(),
            WallEndpoints::Irrational {
                quadratic: (int(7), int(6), int(1))
            }
        );
    }

    #[test]
    fn torsion_pairing_gives_the_vertical_wall() {
        let wall = wall_between(&v(7, 2, 1, 3), &v(7, 0, 0, 1)).unwrap();
        assert_eq!(wall.kind(), &WallKind::Vertical { beta: rat(1, 2) });
        assert!(wall.endpoints().is_err());
        assert_eq!(vertical_wall_line(&v(7, 2, 1, 3)), Some(rat(1, 2)));
        assert_eq!(vertical_wall_line(&v(7, 0, 1, 3)), None);
    }

    #[test]
    fn proportional_classes_have_no_wall() {
        assert!(matches!(
            wall_between(&v(7, 1, 0, -1), &v(7, 2, 0, -2)),
            Err(Error::ProportionalVectors(_, _))
        ));
        assert!(matches!(
            wall_between(&v(7, 1, 0, -1), &v(7, 0, 0, 0)),
            Err(Error::ProportionalVectors(_, _))
        ));
    }

    #[test]
    fn hole_on_the_genus7_wall() {
        let wall = wall_between(&v(7, 1, 0, -1), &v(7, -2, 1, -3)).unwrap();
        let holes = holes_on_wall(&wall, 8);
        assert_eq!(holes.len(), 1);
        assert_eq!(holes[0].delta, v(7, 5, -2, 5));
        assert_eq!(holes[0].point.beta(), &rat(-2, 5));
        assert_eq!(holes[0].point.alpha_sq(), &rat(1, 150));
    }

    #[test]
    fn holes_on_the_genus11_walls() {
        let w1 = wall_between(&v(11, 1, 0, -2), &v(11, -2, 1, -5)).unwrap();
        let h1 = holes_on_wall(&w1, 8);
        assert_eq!(h1.len(), 1);
        assert_eq!(h1[0].delta, v(11, 7, -3, 13));
        assert_eq!(h1[0].point.beta(), &rat(-3, 7));
        assert_eq!(h1[0].point.alpha_sq(), &rat(1, 490));

        let w2 = wall_between(&v(11, 2, -1, 5), &v(11, 1, 0, -3)).unwrap();
        let h2 = holes_on_wall(&w2, 8);
        assert_eq!(h2.len(), 1);
        assert_eq!(h2[0].delta, v(11, 7, -4, 23));
        assert_eq!(h2[0].point.beta(), &rat(-4, 7));
        assert_eq!(h2[0].point.alpha_sq(), &rat(1, 490));
    }

    #[test]
    fn nu_zero_shapes() {
        assert_eq!(nu_zero_curve(&v(7, 1, 0, -1)).shape, NuZeroShape::Hyperbola);
        assert_eq!(nu_zero_curve(&v(7, 5, -2, 5)).shape, NuZeroShape::Parabola);
        assert_eq!(nu_zero_curve(&v(7, 0, 1, 4)).shape, NuZeroShape::VerticalLine);
        assert_eq!(nu_zero_curve(&v(7, 2, 1, 3)).shape, NuZeroShape::PairOfLines);
    }

    #[test]
    fn top_point_lies_on_the_nu_zero_curve() {
        let iw = v(7, 1, 0, -1);
        let wall = wall_between(&iw, &v(7, -2, 1, -3)).unwrap();
        let curve = nu_zero_curve(&iw);
        assert!(curve.contains(&wall.top_point().unwrap()));
    }

    #[test]
    fn nesting_of_same_side_walls() {
        let iw = v(7, 1, 0, -1);
        let w1 = wall_between(&iw, &v(7, -2, 1, -3)).unwrap();
        let w2 = wall_between(&iw, &v(7, 3, -1, 3)).unwrap();
        let rel = nesting_relation(&w1, &w2).unwrap();
        assert!(
            matches!(
                rel,
                NestingRelation::Nested1In2 | NestingRelation::Nested2In1 | NestingRelation::Equal
            ),
            "got {rel:?}"
        );
        assert_eq!(
            nesting_relation(&w1, &w1).unwrap(),
            NestingRelation::Equal
        );
    }

    #[test]
    fn nesting_requires_matching_first_vectors() {
        let w1 = wall_between(&v(7, 1, 0, -1), &v(7, -2, 1, -3)).unwrap();
        let w2 = wall_between(&v(7, 2, 1, 3), &v(7, 1, 0, -1)).unwrap();
        assert!(matches!(
            nesting_relation(&w1, &w2),
            Err(Error::WallPairMismatch)
        ));
    }

    #[test]
    fn common_point_of_a_spherical_class() {
        let g = v(7, 5, -2, 5);
        let samples = vec![v(7, 1, 0, -1), v(7, -2, 1, -3), v(7, 2, 1, 3), v(7, 0, 1, 1)];
        let p = common_point_check(&g, &samples).unwrap();
        assert_eq!(p.beta(), &rat(-2, 5));
        assert_eq!(p.alpha_sq(), &rat(1, 150));

        let f9 = v(9, 3, -1, 3);
        let p9 = common_point_check(&f9, &[v(9, 1, 0, -1), v(9, -2, 1, -4)]).unwrap();
        assert_eq!(p9.beta(), &rat(-1, 3));
        assert_eq!(p9.alpha_sq(), &rat(1, 72));

        assert!(matches!(
            common_point_check(&v(7, 1, 0, -1), &[v(7, 2, 1, 3)]),
            Err(Error::NotNegativeSquare(_))
        ));
    }

    #[test]
    fn vertical_wall_detects_its_holes() {
        // the unique vertical wall of I_xi sits at β = 0 and crosses the
        // hole of the structure-sheaf class (1,0,1) at α² = 1/6
        let wall = wall_between(&v(7, 1, 0, -1), &v(7, 0, 0, 1)).unwrap();
        assert_eq!(wall.kind(), &WallKind::Vertical { beta: rat(0, 1) });
        let holes = holes_on_wall(&wall, 8);
        assert_eq!(holes.len(), 1);
        assert_eq!(holes[0].delta, v(7, 1, 0, 1));
        assert_eq!(holes[0].point.beta(), &rat(0, 1));
        assert_eq!(holes[0].point.alpha_sq(), &rat(1, 6));
    }
}
