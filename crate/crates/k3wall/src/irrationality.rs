//! Degree-of-projection calculus for 3-dimensional linear systems on a
//! polarized K3: the degree formula `d = c₂ − f`, the Hilbert–Samuel lower
//! bound, admissible second Chern classes per degree, kernel-bundle numerics
//! and the staircase-driven exclusion of local base configurations.

use num::Signed;

use crate::error::{Error, Result};
use crate::exact::{int, rat_str, Int, Rat};
use crate::ideals::{
    default_horizon, ideallemma_target, min_colength_subideal_cached,
};
use crate::mukai::{MukaiVector, PolarizedK3};

/// Minimal possible `c₂` of a stable rank-2 kernel bundle: `⌊(g+3)/2⌋`.
pub fn minimal_c2(surface: PolarizedK3) -> u32 {
    (surface.genus() + 3) / 2
}

/// `deg(φ) = c₂ − f`, where `f` is the degree of the cycle-theoretic base
/// locus. A cycle degree exceeding `c₂` means the map is not dominant.
pub fn degree_from_chern(c2: u32, f: u32) -> Result<u32> {
    if f > c2 {
        return Err(Error::InvalidDatum(format!(
            "cycle degree {f} exceeds c2 = {c2}; map not dominant"
        )));
    }
    Ok(c2 - f)
}

/// `deg(φ) ≥ L² − (4/3)·colength(I)`, exact.
pub fn hs_degree_lower_bound(surface: PolarizedK3, colength: u64) -> Rat {
    Rat::from_integer(surface.lsquare_int())
        - Rat::new(int(4) * int(colength as i64), int(3))
}

/// All admissible `c₂` for a degree-`d` map:
/// `⌊(g+3)/2⌋ ≤ c₂ ≤ ⌊(3d + L²)/4⌋`.
pub fn admissible_c2(surface: PolarizedK3, d: u32) -> Result<Vec<u32>> {
    if d < 1 {
        return Err(Error::DegreeZero);
    }
    let lo = minimal_c2(surface);
    let hi_num = 3 * i64::from(d) + surface.lsquare();
    let hi = (hi_num.div_euclid(4)).max(0) as u32;
    if hi < lo {
        return Ok(Vec::new());
    }
    Ok((lo..=hi).collect())
}

/// Mukai vector `(2, 1, g+1−c₂)` of the rank-2 kernel bundle with `c₂`.
pub fn kernel_mukai_vector(surface: PolarizedK3, c2: u32) -> Result<MukaiVector> {
    let min = minimal_c2(surface);
    if c2 < min {
        return Err(Error::C2BelowMinimal { c2, min });
    }
    let s = i64::from(surface.genus()) + 1 - i64::from(c2);
    Ok(MukaiVector::new(surface, 2, 1, s))
}

/// `h⁰ = χ(O, E) = r + s` for a stable class with vanishing `h¹`, `h²`.
pub fn expected_h0(v: &MukaiVector) -> Result<Int> {
    let count = v.r() + v.s();
    if count.is_negative() {
        return Err(Error::NegativeSectionCount(count.to_string()));
    }
    Ok(count)
}

/// Genus of the primitive polarization on the rank-2 moduli K3
/// `M(2, L, (g−1)/2)`: `g` itself when `g ≡ 3 (mod 4)`, `(g+3)/4` when
/// `g ≡ 1 (mod 4)`.
pub fn moduli_polarization_genus(genus: u32) -> Result<u32> {
    if genus % 2 == 0 {
        return Err(Error::EvenGenus(genus));
    }
    match genus % 4 {
        3 => Ok(genus),
        _ => Ok((genus + 3) / 4),
    }
}

/// An index record for a Brill–Noether stratum `W²_d(S,L)_{c,m}`; the
/// dimension is stored only when asserted by the source analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumIndex {
    pub c2: u32,
    pub base_length: u32,
    pub dimension: Option<u32>,
}

/// Numerical data of one projection `S --> P²`: degree, kernel `c₂`,
/// schematic base length `m`, cycle base degree `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionDatum {
    surface: PolarizedK3,
    degree: u32,
    c2: u32,
    scheme_length: u32,
    cycle_degree: u32,
}

impl ProjectionDatum {
    pub fn new(
        surface: PolarizedK3,
        degree: u32,
        c2: u32,
        scheme_length: u32,
        cycle_degree: u32,
    ) -> Result<Self> {
        if degree < 1 {
            return Err(Error::DegreeZero);
        }
        if cycle_degree < scheme_length {
            return Err(Error::InvalidDatum(format!(
                "cycle degree f = {cycle_degree} below scheme length m = {scheme_length}"
            )));
        }
        if c2 < cycle_degree || c2 - cycle_degree != degree {
            return Err(Error::InvalidDatum(format!(
                "degree {degree} != c2 - f = {c2} - {cycle_degree}"
            )));
        }
        if i64::from(c2) > surface.lsquare() {
            return Err(Error::InvalidDatum(format!(
                "c2 = {c2} exceeds L^2 = {}",
                surface.lsquare()
            )));
        }
        Ok(ProjectionDatum {
            surface,
            degree,
            c2,
            scheme_length,
            cycle_degree,
        })
    }

    pub fn surface(&self) -> PolarizedK3 {
        self.surface
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn c2(&self) -> u32 {
        self.c2
    }

    pub fn scheme_length(&self) -> u32 {
        self.scheme_length
    }

    pub fn cycle_degree(&self) -> u32 {
        self.cycle_degree
    }

    /// `colength(I) = L² − c₂`.
    pub fn colength(&self) -> u64 {
        (self.surface.lsquare() - i64::from(self.c2)) as u64
    }
}

/// One support point of the base locus: schematic length `m`, cycle degree
/// `f ≥ m`, and whether the local scheme is curvilinear (length 1 always is).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalPoint {
    pub scheme_length: u32,
    pub cycle_degree: u32,
    pub curvilinear: bool,
}

impl LocalPoint {
    pub fn curvilinear(m: u32, f: u32) -> Result<Self> {
        if m < 1 {
            return Err(Error::SchemeLengthZero);
        }
        if f < m {
            return Err(Error::CycleDegreeTooSmall { m, f });
        }
        Ok(LocalPoint {
            scheme_length: m,
            cycle_degree: f,
            curvilinear: true,
        })
    }

    pub fn non_curvilinear(m: u32, f: u32) -> Result<Self> {
        let mut p = Self::curvilinear(m.max(1), f)?;
        if m < 3 {
            // length ≤ 2 subschemes are always curvilinear
            return Err(Error::InvalidDatum(format!(
                "length-{m} subschemes are curvilinear"
            )));
        }
        p.curvilinear = false;
        Ok(p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// None of the numerical bounds excludes the configuration.
    Feasible,
    /// A bound fired; the string says which.
    Excluded(String),
    /// A non-curvilinear point carries no staircase target; the
    /// configuration is outside the classified case analysis.
    Unclassified(String),
}

/// Tests a local configuration of the base locus against the three numerical
/// obstructions: admissible `c₂`, the Hilbert–Samuel degree bound, and the
/// summed staircase colength bounds of the curvilinear containment targets
/// (each local base ideal has at most three generators).
pub fn stratum_feasibility(datum: &ProjectionDatum, points: &[LocalPoint]) -> Result<Feasibility> {
    let total_m: u32 = points.iter().map(|p| p.scheme_length).sum();
    let total_f: u32 = points.iter().map(|p| p.cycle_degree).sum();
    if total_m > datum.scheme_length() || total_f > datum.cycle_degree() {
        return Err(Error::InvalidDatum(format!(
            "configuration totals (m, f) = ({total_m}, {total_f}) exceed the datum ({}, {})",
            datum.scheme_length(),
            datum.cycle_degree()
        )));
    }

    let surface = datum.surface();
    let hs = hs_degree_lower_bound(surface, datum.colength());
    if hs > Rat::from_integer(int(i64::from(datum.degree()))) {
        return Ok(Feasibility::Excluded(format!(
            "hilbert-samuel: degree lower bound {} exceeds d = {}",
            rat_str(&hs),
            datum.degree()
        )));
    }

    let admissible = admissible_c2(surface, datum.degree())?;
    if !admissible.contains(&datum.c2()) {
        return Ok(Feasibility::Excluded(format!(
            "c2 = {} outside the admissible range {:?} for degree {}",
            datum.c2(),
            admissible,
            datum.degree()
        )));
    }

    let mut bound_sum = 0u64;
    let mut parts = Vec::new();
    let mut unclassified = Vec::new();
    for point in points {
        if !point.curvilinear {
            unclassified.push(format!(
                "(m={}, f={}) non-curvilinear",
                point.scheme_length, point.cycle_degree
            ));
            continue;
        }
        let (a, b) = ideallemma_target(point.scheme_length, point.cycle_degree)?;
        let target = a.product(&b);
        let bound = min_colength_subideal_cached(&target, 3, default_horizon(&target, 3))?;
        parts.push(format!(
            "(m={}, f={}) -> colength >= {bound} via {target}",
            point.scheme_length, point.cycle_degree
        ));
        bound_sum += bound;
    }
    if bound_sum > datum.colength() {
        return Ok(Feasibility::Excluded(format!(
            "colength: local bounds sum to {bound_sum} > budget {} [{}]",
            datum.colength(),
            parts.join("; ")
        )));
    }
    if !unclassified.is_empty() {
        return Ok(Feasibility::Unclassified(unclassified.join("; ")));
    }
    Ok(Feasibility::Feasible)
}

/// Per-genus admissible-c₂ table rows used by the CLI.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub genus: u32,
    pub lsquare: i64,
    pub minimal_c2: u32,
    pub per_degree: Vec<(u32, Vec<u32>)>,
}

pub fn admissible_table(genera: &[u32], degrees: &[u32]) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for &g in genera {
        let surface = PolarizedK3::new(g)?;
        let mut per_degree = Vec::new();
        for &d in degrees {
            per_degree.push((d, admissible_c2(surface, d)?));
        }
        rows.push(TableRow {
            genus: g,
            lsquare: surface.lsquare(),
            minimal_c2: minimal_c2(surface),
            per_degree,
        });
    }
    Ok(rows)
}

/// Exact check that `expected_h0` agrees with the closed form
/// `g + 3 − ⌊(g+3)/2⌋` on minimal-c₂ kernel bundles.
pub fn minimal_kernel_h0(surface: PolarizedK3) -> Result<Int> {
    let v = kernel_mukai_vector(surface, minimal_c2(surface))?;
    let h0 = expected_h0(&v)?;
    let g = i64::from(surface.genus());
    debug_assert!(h0 == int(g + 3 - (g + 3).div_euclid(2)));
    Ok(h0)
}
