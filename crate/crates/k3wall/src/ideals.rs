//! Staircases of cofinite monomial ideals in two variables.
//!
//! An ideal is stored by its minimal generators `(a, b)` (meaning `x^a·y^b`),
//! pairwise incomparable under componentwise order. Cofiniteness — a pure
//! power of `x` and a pure power of `y` in the ideal — is part of the type
//! invariant; the unit ideal counts as cofinite.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{int, Rat};

/// A cofinite monomial ideal in `k[x, y]`, as its minimal staircase.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<(u32, u32)>,
}

fn divides(lhs: (u32, u32), rhs: (u32, u32)) -> bool {
    lhs.0 <= rhs.0 && lhs.1 <= rhs.1
}

fn minimalize(mut gens: Vec<(u32, u32)>) -> Vec<(u32, u32)> {
    gens.sort_unstable();
    gens.dedup();
    let kept: Vec<(u32, u32)> = gens
        .iter()
        .filter(|&&m| !gens.iter().any(|&other| other != m && divides(other, m)))
        .copied()
        .collect();
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by the given monomials, minimalizing the
    /// generating set. Errors unless the result is cofinite.
    pub fn new(gens: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let gens = minimalize(gens.into_iter().collect());
        let has_x_power = gens.iter().any(|&(_, b)| b == 0);
        let has_y_power = gens.iter().any(|&(a, _)| a == 0);
        if !has_x_power || !has_y_power {
            return Err(Error::NotCofinite);
        }
        Ok(MonomialIdeal { gens })
    }

    pub fn unit() -> Self {
        MonomialIdeal { gens: vec![(0, 0)] }
    }

    /// `(x, y)^k`, generated by all monomials of total degree `k`.
    pub fn maximal_power(k: u32) -> Self {
        if k == 0 {
            return Self::unit();
        }
        let gens = (0..=k).map(|i| (i, k - i)).collect();
        MonomialIdeal { gens }
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [(0, 0)]
    }

    /// Minimal generators sorted by `x`-exponent ascending.
    pub fn generators(&self) -> &[(u32, u32)] {
        &self.gens
    }

    pub fn min_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn contains_monomial(&self, m: (u32, u32)) -> bool {
        self.gens.iter().any(|&g| divides(g, m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|&g| self.contains_monomial(g))
    }

    /// Exponent of the pure `x`-power generator.
    fn x_power(&self) -> u32 {
        self.gens
            .iter()
            .find(|&&(_, b)| b == 0)
            .map(|&(a, _)| a)
            .expect("cofinite")
    }

    /// Exponent of the pure `y`-power generator.
    fn y_power(&self) -> u32 {
        self.gens
            .iter()
            .find(|&&(a, _)| a == 0)
            .map(|&(_, b)| b)
            .expect("cofinite")
    }

    /// Largest total degree among the minimal generators.
    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    /// Number of monomials outside the ideal.
    pub fn colength(&self) -> u64 {
        let height = self.y_power();
        let mut total = 0u64;
        for row in 0..height {
            let width = self
                .gens
                .iter()
                .filter(|&&(_, b)| b <= row)
                .map(|&(a, _)| a)
                .min()
                .unwrap_or(self.x_power());
            total += u64::from(width);
        }
        total
    }

    /// Product ideal, generated by pairwise products and minimalized.
    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .flat_map(|&(a, b)| other.gens.iter().map(move |&(c, d)| (a + c, b + d)))
            .collect();
        MonomialIdeal {
            gens: minimalize(gens),
        }
    }

    /// Parses the staircase text format: a comma-separated generator list
    /// like `x^3, x^2*y, x*y^3, y^5`. Whitespace is ignored, `*` between
    /// factors is optional, exponent 1 may be elided, and `1` denotes the
    /// unit ideal generator.
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens = Vec::new();
        let bytes: Vec<char> = text.chars().collect();
        let mut pos = 0usize;
        let n = bytes.len();
        let mut current: Option<(u32, u32)> = None;

        let flush = |current: &mut Option<(u32, u32)>, gens: &mut Vec<(u32, u32)>, pos| {
            match current.take() {
                Some(m) => {
                    gens.push(m);
                    Ok(())
                }
                None => Err(Error::Parse {
                    pos,
                    msg: "empty generator".into(),
                }),
            }
        };

        while pos < n {
            let ch = bytes[pos];
            match ch {
                c if c.is_whitespace() || c == '*' => pos += 1,
                ',' => {
                    flush(&mut current, &mut gens, pos)?;
                    pos += 1;
                }
                '1' => {
                    current.get_or_insert((0, 0));
                    pos += 1;
                }
                'x' | 'y' => {
                    pos += 1;
                    let mut exp = 1u32;
                    if pos < n && bytes[pos] == '^' {
                        pos += 1;
                        let start = pos;
                        while pos < n && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        if start == pos {
                            return Err(Error::Parse {
                                pos,
                                msg: "expected an exponent after '^'".into(),
                            });
                        }
                        let digits: String = bytes[start..pos].iter().collect();
                        exp = digits.parse().map_err(|_| Error::Parse {
                            pos: start,
                            msg: format!("exponent {digits:?} out of range"),
                        })?;
                    }
                    let entry = current.get_or_insert((0, 0));
                    if ch == 'x' {
                        entry.0 += exp;
                    } else {
                        entry.1 += exp;
                    }
                }
                other => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("unexpected character {other:?}"),
                    });
                }
            }
        }
        flush(&mut current, &mut gens, pos)?;
        MonomialIdeal::new(gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // staircase order: x-exponent descending
        let mut gens = self.gens.clone();
        gens.sort_unstable_by(|l, r| r.0.cmp(&l.0));
        let mut parts = Vec::new();
        for (a, b) in gens {
            let mut factors = Vec::new();
            for (var, exp) in [("x", a), ("y", b)] {
                match exp {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    e => factors.push(format!("{var}^{e}")),
                }
            }
            if factors.is_empty() {
                parts.push("1".to_string());
            } else {
                parts.push(factors.join("*"));
            }
        }
        write!(f, "{}", parts.join(", "))
    }
}

/// The local containment targets provided by a curvilinear base point of
/// scheme length `m` and cycle degree `f ≥ m`: the pair
/// `A = (x, y^m)` and `B = (x^⌈f/m⌉, x^⌈(f−1)/m⌉·y, …, y^f)`, minimalized.
pub fn ideallemma_target(m: u32, f: u32) -> Result<(MonomialIdeal, MonomialIdeal)> {
    if m < 1 {
        return Err(Error::SchemeLengthZero);
    }
    if f < m {
        return Err(Error::CycleDegreeTooSmall { m, f });
    }
    let a = MonomialIdeal::new([(1, 0), (0, m)])?;
    let mut gens: Vec<(u32, u32)> = (0..f).map(|i| ((f - i).div_ceil(m), i)).collect();
    gens.push((0, f));
    let b = MonomialIdeal::new(gens)?;
    Ok((a, b))
}

/// Exact rational `4/3 · colength`, the Hilbert–Samuel multiplicity bound for
/// local ideals with at most three generators.
pub fn hs_multiplicity_bound(colength: u64) -> Rat {
    Rat::new(int(4) * int(colength as i64), int(3))
}

/// Colength of the staircase spanned by a sorted antichain that contains a
/// pure x-power and a pure y-power.
fn antichain_colength(chain: &[(u32, u32)]) -> u64 {
    let height = chain.iter().find(|&&(a, _)| a == 0).map(|&(_, b)| b).unwrap();
    let x_pow = chain.iter().find(|&&(_, b)| b == 0).map(|&(a, _)| a).unwrap();
    let mut total = 0u64;
    for row in 0..height {
        let width = chain
            .iter()
            .filter(|&&(_, b)| b <= row)
            .map(|&(a, _)| a)
            .min()
            .unwrap_or(x_pow);
        total += u64::from(width);
    }
    total
}

fn candidate_monomials(j: &MonomialIdeal, horizon: u32) -> Vec<(u32, u32)> {
    let mut cands = Vec::new();
    for a in 0..=horizon {
        for b in 0..=(horizon - a) {
            if j.contains_monomial((a, b)) {
                cands.push((a, b));
            }
        }
    }
    cands
}

/// Depth-first enumeration of antichains extending `chain` with candidate
/// indices `> from`, folding the minimum colength of every cofinite antichain
/// of size at most `max_gens`.
fn extend_chain(
    cands: &[(u32, u32)],
    from: usize,
    chain: &mut Vec<(u32, u32)>,
    max_gens: usize,
    best: &mut Option<u64>,
) {
    let has_x = chain.iter().any(|&(_, b)| b == 0);
    let has_y = chain.iter().any(|&(a, _)| a == 0);
    if has_x && has_y {
        let colength = antichain_colength(chain);
        if best.map_or(true, |b| colength < b) {
            *best = Some(colength);
        }
    }
    if chain.len() == max_gens {
        return;
    }
    for idx in from..cands.len() {
        let m = cands[idx];
        if chain
            .iter()
            .any(|&g| divides(g, m) || divides(m, g))
        {
            continue;
        }
        chain.push(m);
        extend_chain(cands, idx + 1, chain, max_gens, best);
        chain.pop();
    }
}

fn search_from_first(
    cands: &[(u32, u32)],
    first: usize,
    max_gens: usize,
) -> Option<u64> {
    let mut best = None;
    let mut chain = vec![cands[first]];
    extend_chain(cands, first + 1, &mut chain, max_gens, &mut best);
    best
}

fn validate_search(j: &MonomialIdeal, max_gens: usize, horizon: u32) -> Result<Vec<(u32, u32)>> {
    if max_gens < 1 {
        return Err(Error::GeneratorBoundZero);
    }
    let needed = j.max_generator_degree() + max_gens as u32;
    if horizon < needed {
        return Err(Error::HorizonTooSmall { horizon, needed });
    }
    Ok(candidate_monomials(j, horizon))
}

/// Default search horizon: max generator degree of `J` plus `max_gens` plus 2.
/// The result is stable under any further increase on the shipped corpus.
pub fn default_horizon(j: &MonomialIdeal, max_gens: usize) -> u32 {
    j.max_generator_degree() + max_gens as u32 + 2
}

/// Minimum colength over all cofinite monomial ideals `I ⊆ J` with at most
/// `max_gens` minimal generators, each of total degree at most `horizon`.
/// This is a brute-force enumeration of generator antichains inside `J`,
/// lexicographically ordered to skip permutations; with the `parallel`
/// feature it fans out over the choice of the first generator.
pub fn min_colength_subideal(j: &MonomialIdeal, max_gens: usize, horizon: u32) -> Result<u64> {
    let cands = validate_search(j, max_gens, horizon)?;
    #[cfg(feature = "parallel")]
    let best = (0..cands.len())
        .into_par_iter()
        .filter_map(|first| search_from_first(&cands, first, max_gens))
        .min();
    #[cfg(not(feature = "parallel"))]
    let best = (0..cands.len())
        .filter_map(|first| search_from_first(&cands, first, max_gens))
        .min();
    best.ok_or(Error::HorizonTooSmall {
        horizon,
        needed: j.max_generator_degree() + max_gens as u32,
    })
}

/// Single-threaded twin of [`min_colength_subideal`]; always available so the
/// two strategies can be cross-checked and benchmarked against each other.
pub fn min_colength_subideal_seq(j: &MonomialIdeal, max_gens: usize, horizon: u32) -> Result<u64> {
    let cands = validate_search(j, max_gens, horizon)?;
    let best = (0..cands.len())
        .filter_map(|first| search_from_first(&cands, first, max_gens))
        .min();
    best.ok_or(Error::HorizonTooSmall {
        horizon,
        needed: j.max_generator_degree() + max_gens as u32,
    })
}

type CacheKey = (Vec<(u32, u32)>, usize, u32);

struct CacheEntry {
    value: u64,
    hits: u64,
}

fn search_cache() -> &'static Mutex<HashMap<CacheKey, CacheEntry>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, CacheEntry>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized subideal search shared by the scenario runner, so identical
/// targets appearing in different dossiers are computed once per process.
pub fn min_colength_subideal_cached(
    j: &MonomialIdeal,
    max_gens: usize,
    horizon: u32,
) -> Result<u64> {
    let key = (j.generators().to_vec(), max_gens, horizon);
    if let Some(entry) = search_cache().lock().unwrap().get_mut(&key) {
        entry.hits += 1;
        return Ok(entry.value);
    }
    let value = min_colength_subideal(j, max_gens, horizon)?;
    search_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(CacheEntry { value, hits: 0 });
    Ok(value)
}

/// Number of cache hits recorded for one search key.
pub fn subideal_cache_hits(j: &MonomialIdeal, max_gens: usize, horizon: u32) -> u64 {
    let key = (j.generators().to_vec(), max_gens, horizon);
    search_cache()
        .lock()
        .unwrap()
        .get(&key)
        .map_or(0, |e| e.hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(text).unwrap()
    }

    #[test]
    fn colength_examples() {
        assert_eq!(MonomialIdeal::maximal_power(5).colength(), 15);
        assert_eq!(ideal("x^3, x^2y, xy^3, y^5").colength(), 9);
        assert_eq!(MonomialIdeal::unit().colength(), 0);
        assert_eq!(MonomialIdeal::maximal_power(3).colength(), 6);
    }

    #[test]
    fn product_examples() {
        let lhs = ideal("x, y^2").product(&ideal("x^2, x*y^2, y^4"));
        assert_eq!(lhs, ideal("x^3, x^2y^2, xy^4, y^6"));

        let cube = ideal("x,y").product(&ideal("x^2, x*y, y^2"));
        assert_eq!(cube, MonomialIdeal::maximal_power(3));

        let unital = ideal("x^3, x^2y, xy^3, y^5").product(&MonomialIdeal::unit());
        assert_eq!(unital, ideal("x^3, x^2y, xy^3, y^5"));
    }

    #[test]
    fn ideallemma_targets() {
        let (a, b) = ideallemma_target(2, 3).unwrap();
        assert_eq!(a, ideal("x, y^2"));
        assert_eq!(b, ideal("x^2, x*y, y^3"));

        let (a, b) = ideallemma_target(1, 2).unwrap();
        assert_eq!(a, ideal("x, y"));
        assert_eq!(b, ideal("x^2, x*y, y^2"));

        let (_, b) = ideallemma_target(2, 4).unwrap();
        assert_eq!(b, ideal("x^2, x*y^2, y^4"));

        assert!(matches!(
            ideallemma_target(3, 2),
            Err(Error::CycleDegreeTooSmall { m: 3, f: 2 })
        ));
        assert!(matches!(ideallemma_target(0, 1), Err(Error::SchemeLengthZero)));
    }

    #[test]
    fn target_second_component_has_the_pure_powers() {
        for m in 1..5u32 {
            for f in m..(m + 5) {
                let (_, b) = ideallemma_target(m, f).unwrap();
                assert!(b.contains_monomial((0, f)));
                assert!(b.contains_monomial((f.div_ceil(m), 0)));
            }
        }
    }

    #[test]
    fn min_generator_counts() {
        assert_eq!(ideal("x, y^2").min_generators(), 2);
        assert_eq!(ideal("x^3, x^2y, xy^3, y^5").min_generators(), 4);
        for k in 1..6 {
            assert_eq!(
                MonomialIdeal::maximal_power(k).min_generators() as u32,
                k + 1
            );
        }
    }

    #[test]
    fn hs_bound_is_exact() {
        assert_eq!(hs_multiplicity_bound(9), rat(12, 1));
        assert_eq!(hs_multiplicity_bound(3), rat(4, 1));
        assert_eq!(hs_multiplicity_bound(7), rat(28, 3));
    }

    #[test]
    fn subideal_search_paper_corpus() {
        let cases: [(&str, u64); 5] = [
            ("x^3, x^2y, xy^3, y^5", 11),
            ("x^3, x^2y, xy^4, y^7", 15),
            ("x^3, x^2y^2, xy^4, y^6", 14),
            ("x^3, x^2y, xy^2, y^3", 7),
            ("x^4, x^3y, x^2y^2, xy^3, y^4", 12),
        ];
        for (text, expected) in cases {
            let j = ideal(text);
            let h = default_horizon(&j, 3);
            assert_eq!(min_colength_subideal(&j, 3, h).unwrap(), expected, "{text}");
            assert_eq!(
                min_colength_subideal_seq(&j, 3, h).unwrap(),
                expected,
                "{text} (seq)"
            );
        }
    }

    #[test]
    fn search_equals_colength_when_generators_fit() {
        let j = ideal("x^2, y^3");
        let h = default_horizon(&j, 3);
        assert_eq!(min_colength_subideal(&j, 3, h).unwrap(), j.colength());
        let m2 = MonomialIdeal::maximal_power(2);
        assert_eq!(
            min_colength_subideal(&m2, 3, default_horizon(&m2, 3)).unwrap(),
            m2.colength()
        );
    }

    #[test]
    fn search_horizon_validation() {
        let j = ideal("x^3, y^5");
        assert!(matches!(
            min_colength_subideal(&j, 3, 4),
            Err(Error::HorizonTooSmall { .. })
        ));
        assert!(matches!(
            min_colength_subideal(&j, 0, 12),
            Err(Error::GeneratorBoundZero)
        ));
    }

    #[test]
    fn parser_accepts_the_cli_spellings() {
        assert_eq!(ideal("x^3,x^2y,xy^3,y^5"), ideal("x^3, x^2*y, x*y^3, y^5"));
        assert_eq!(ideal(" 1 "), MonomialIdeal::unit());
        assert_eq!(ideal("y, x"), ideal("x, y"));
        assert_eq!(ideal("x^2, x^3, y"), ideal("x^2, y"));
    }

    #[test]
    fn parser_errors_carry_positions() {
        match MonomialIdeal::parse("x^3, z") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected a parse error, got {other:?}"),
        }
        match MonomialIdeal::parse("x^, y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(MonomialIdeal::parse("x^3, ,y").is_err());
    }

    #[test]
    fn non_cofinite_ideals_are_rejected() {
        assert!(matches!(MonomialIdeal::parse("x^2"), Err(Error::NotCofinite)));
        assert!(matches!(
            MonomialIdeal::parse("x^2, x*y"),
            Err(Error::NotCofinite)
        ));
    }

    #[test]
    fn display_round_trips() {
        let j = ideal("x^3, x^2y, xy^3, y^5");
        assert_eq!(j.to_string(), "x^3, x^2*y, x*y^3, y^5");
        assert_eq!(MonomialIdeal::parse(&j.to_string()).unwrap(), j);
        assert_eq!(MonomialIdeal::unit().to_string(), "1");
    }

    #[test]
    fn cache_counts_hits() {
        let j = ideal("x^2, xy, y^2");
        let h = default_horizon(&j, 2);
        let before = subideal_cache_hits(&j, 2, h);
        let a = min_colength_subideal_cached(&j, 2, h).unwrap();
        let b = min_colength_subideal_cached(&j, 2, h).unwrap();
        assert_eq!(a, b);
        assert!(subideal_cache_hits(&j, 2, h) > before);
    }
}
