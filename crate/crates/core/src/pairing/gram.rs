use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::socle::SoclePairing;
use crate::algebra::rational::format_rational;
use crate::algebra::{Monomial, NuPoly, Rational};
use crate::error::{Error, Result};
use crate::hodge::AssociatedIdeal;
use crate::linalg::{bareiss, isolate_real_roots, rank_modulo, specialize, split_rational, NuMatrix, RealRoot, SparseEchelon, SparseRow};

/// Shapes of the blocks of the Gram matrix, up to permutations and nonzero
/// rational factors of the entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockShape {
    /// `(1)`
    One,
    /// `(nu)`
    Nu,
    /// `(1 nu)`
    OneNu,
    /// 3x3 with six entries, each constant or a multiple of `nu`, and
    /// determinant a multiple of `nu(nu+1)`.
    Triangle,
    Other,
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockShape::One => "(1)",
            BlockShape::Nu => "(nu)",
            BlockShape::OneNu => "(1 nu)",
            BlockShape::Triangle => "3x3 nu(nu+1)",
            BlockShape::Other => "other",
        })
    }
}

impl Serialize for BlockShape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A connected component of the bipartite graph of nonzero entries.
#[derive(Clone, Debug, Serialize)]
pub struct Block {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub shape: BlockShape,
    pub generic_rank: usize,
    /// Determinant of square blocks up to size 4.
    pub determinant: Option<NuPoly>,
    pub entries: NuMatrix,
}

/// A value of `nu` where the rank drops.
#[derive(Clone, Debug, PartialEq)]
pub enum CriticalNu {
    Rational(Rational),
    /// All roots of a monic polynomial without rational roots.
    Algebraic { polynomial: NuPoly, real_roots: Vec<RealRoot> },
}

impl Serialize for CriticalNu {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            CriticalNu::Rational(q) => s.serialize_str(&format_rational(q)),
            CriticalNu::Algebraic { polynomial, real_roots } => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("root_of", polynomial)?;
                m.serialize_entry("real_roots", real_roots)?;
                m.end()
            }
        }
    }
}

impl fmt::Display for CriticalNu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalNu::Rational(q) => f.write_str(&format_rational(q)),
            CriticalNu::Algebraic { polynomial, .. } => write!(f, "root of {polynomial}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalValue {
    pub nu: CriticalNu,
    /// `generic_rank - rank(nu)`.
    pub corank: usize,
}

fn serialize_monomials<S: Serializer>(ms: &[Monomial], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ms.iter().map(|m| m.to_string()))
}

fn serialize_checks<S: Serializer>(v: &[(Rational, usize)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(q, r)| (format_rational(q), *r)))
}

/// The matrix of `psi_1 + nu psi_2` with its block structure, generic rank and
/// critical values.
#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub row_degree: u32,
    pub col_degree: u32,
    /// Row labels (standard monomials), empty for bare matrices.
    #[serde(serialize_with = "serialize_monomials")]
    pub rows: Vec<Monomial>,
    #[serde(serialize_with = "serialize_monomials")]
    pub cols: Vec<Monomial>,
    #[serde(skip)]
    pub entries: NuMatrix,
    pub blocks: Vec<Block>,
    pub zero_rows: usize,
    pub zero_cols: usize,
    pub generic_rank: usize,
    pub critical: Vec<CriticalValue>,
    /// Ranks at random non-critical values, all equal to the generic rank.
    #[serde(serialize_with = "serialize_checks")]
    pub rank_checks: Vec<(Rational, usize)>,
}

/// Gram matrix of `psi_1 + nu psi_2` on `(S/I_1 ∩ I_2)_row x (S/I_1 ∩ I_2)_col`
/// in the standard monomial bases of the degreewise intersections.
pub fn gram_matrix(a1: &AssociatedIdeal, a2: &AssociatedIdeal, row_degree: u32, col_degree: u32) -> Result<GramReport> {
    if a1.nvars() != a2.nvars() {
        return Err(Error::Precondition("ideals live in different rings".into()));
    }
    if a1.socle_degree != a2.socle_degree {
        return Err(Error::DegreeMismatch {
            expected: a1.socle_degree,
            got: a2.socle_degree,
        });
    }
    if row_degree + col_degree != a1.socle_degree {
        return Err(Error::DegreeMismatch {
            expected: a1.socle_degree,
            got: row_degree + col_degree,
        });
    }
    let p1 = SoclePairing::new(a1)?;
    let p2 = SoclePairing::new(a2)?;
    let basis = |t: u32| a1.ideal.span(t).intersect(&a2.ideal.span(t)).standard_monomials();
    let rows = basis(row_degree);
    let cols = basis(col_degree);
    let entries: NuMatrix = rows
        .par_iter()
        .map(|r| {
            cols.iter()
                .map(|c| NuPoly::linear(p1.monomial_value(r, c), p2.monomial_value(r, c)))
                .collect()
        })
        .collect();
    let mut report = GramReport::from_matrix(entries);
    report.row_degree = row_degree;
    report.col_degree = col_degree;
    report.rows = rows;
    report.cols = cols;
    Ok(report)
}

fn entry_kind(e: &NuPoly) -> Option<bool> {
    // Some(false): nonzero constant, Some(true): nonzero multiple of nu
    match e.degree() {
        Some(0) => Some(false),
        Some(1) if e.coeff(0).is_zero() => Some(true),
        _ => None,
    }
}

fn determinant(m: &NuMatrix) -> NuPoly {
    match m.len() {
        0 => NuPoly::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = NuPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: NuMatrix = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect())
                    .collect();
                let t = &m[0][j] * &determinant(&minor);
                acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

fn classify(m: &NuMatrix, det: Option<&NuPoly>) -> BlockShape {
    let kinds: Vec<Option<bool>> = m.iter().flatten().filter(|e| !e.is_zero()).map(entry_kind).collect();
    if kinds.iter().any(Option::is_none) {
        return BlockShape::Other;
    }
    let nus = kinds.iter().filter(|k| **k == Some(true)).count();
    match (m.len(), m[0].len(), kinds.len()) {
        (1, 1, 1) if nus == 0 => BlockShape::One,
        (1, 1, 1) => BlockShape::Nu,
        (1, 2, 2) if nus == 1 => BlockShape::OneNu,
        (3, 3, 6) => {
            let target = NuPoly::from_coeffs(vec![Rational::zero(), Rational::one(), Rational::one()]);
            match det {
                Some(d) if !d.is_zero() && d.monic() == target => BlockShape::Triangle,
                _ => BlockShape::Other,
            }
        }
        _ => BlockShape::Other,
    }
}

/// Rank of the specialization at `nu`, by sparse elimination.
pub fn rank_at_value(entries: &NuMatrix, nu: &Rational) -> usize {
    let mut e = SparseEchelon::new();
    for row in entries {
        let r: SparseRow = row
            .iter()
            .enumerate()
            .filter_map(|(j, p)| {
                let v = p.eval(nu);
                (!v.is_zero()).then_some((j, v))
            })
            .collect();
        if !r.is_empty() {
            e.insert(r);
        }
    }
    e.rank()
}

impl GramReport {
    /// Block structure, ranks and critical values of an arbitrary matrix over
    /// `Q[nu]`.
    pub fn from_matrix(entries: NuMatrix) -> GramReport {
        let nr = entries.len();
        let nc = entries.first().map_or(0, Vec::len);
        // union-find over rows 0..nr and columns nr..nr+nc
        let mut parent: Vec<usize> = (0..nr + nc).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, nr + j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for i in 0..nr + nc {
            let r = find(&mut parent, i);
            let g = groups.entry(r).or_default();
            if i < nr {
                g.0.push(i);
            } else {
                g.1.push(i - nr);
            }
        }
        let zero_rows = groups.values().filter(|g| g.1.is_empty()).count();
        let zero_cols = groups.values().filter(|g| g.0.is_empty()).count();
        let blocks: Vec<Block> = groups
            .into_values()
            .filter(|g| !g.0.is_empty() && !g.1.is_empty())
            .map(|(rows, cols)| {
                let sub: NuMatrix = rows.iter().map(|&i| cols.iter().map(|&j| entries[i][j].clone()).collect()).collect();
                let generic_rank = bareiss(&sub).rank;
                let determinant = (rows.len() == cols.len() && rows.len() <= 4).then(|| determinant(&sub));
                Block {
                    shape: classify(&sub, determinant.as_ref()),
                    rows,
                    cols,
                    generic_rank,
                    determinant,
                    entries: sub,
                }
            })
            .collect();
        let generic_rank = blocks.iter().map(|b| b.generic_rank).sum();
        let mut report = GramReport {
            row_degree: 0,
            col_degree: 0,
            rows: Vec::new(),
            cols: Vec::new(),
            entries,
            blocks,
            zero_rows,
            zero_cols,
            generic_rank,
            critical: Vec::new(),
            rank_checks: Vec::new(),
        };
        report.critical = report.find_critical();
        report.rank_checks = report.certify_generic_rank();
        report
    }

    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn rank_at(&self, nu: &Rational) -> usize {
        rank_at_value(&self.entries, nu)
    }

    /// Number of blocks of each shape.
    pub fn shape_census(&self) -> BTreeMap<BlockShape, usize> {
        let mut m = BTreeMap::new();
        for b in &self.blocks {
            *m.entry(b.shape).or_insert(0) += 1;
        }
        m
    }

    pub fn is_critical(&self, nu: &Rational) -> bool {
        self.critical.iter().any(|c| match &c.nu {
            CriticalNu::Rational(q) => q == nu,
            CriticalNu::Algebraic { polynomial, .. } => polynomial.eval(nu).is_zero(),
        })
    }

    /// Rational critical values, sorted.
    pub fn rational_critical_values(&self) -> Vec<Rational> {
        self.critical
            .iter()
            .filter_map(|c| match &c.nu {
                CriticalNu::Rational(q) => Some(q.clone()),
                CriticalNu::Algebraic { .. } => None,
            })
            .collect()
    }

    /// Candidates are the roots of the top nonzero minors of the blocks (the
    /// rank of a block can only drop there); each rational candidate is
    /// confirmed by an exact rank evaluation of the whole matrix, and the
    /// remaining factors are resolved by rank computations modulo them.
    fn find_critical(&self) -> Vec<CriticalValue> {
        let mut candidates: BTreeSet<Rational> = BTreeSet::new();
        let mut residual = NuPoly::one();
        for b in &self.blocks {
            let minor = bareiss(&b.entries).top_minor();
            let (roots, rest) = split_rational(&minor);
            candidates.extend(roots);
            let g = residual.gcd(&rest);
            residual = (&residual * &rest).exact_div(&g).expect("gcd divides").monic();
        }
        let mut out = Vec::new();
        for q in candidates {
            let r = self.rank_at(&q);
            if r < self.generic_rank {
                out.push(CriticalValue {
                    nu: CriticalNu::Rational(q),
                    corank: self.generic_rank - r,
                });
            }
        }
        if residual.degree().is_some_and(|d| d > 0) {
            let mut factors: Vec<(NuPoly, usize)> = vec![(residual, 0)];
            for b in &self.blocks {
                factors = factors
                    .into_iter()
                    .flat_map(|(f, c)| rank_modulo(&b.entries, &f).into_iter().map(move |(g, r)| (g, c + b.generic_rank - r)))
                    .collect();
            }
            for (polynomial, corank) in factors {
                if corank > 0 {
                    out.push(CriticalValue {
                        nu: CriticalNu::Algebraic {
                            real_roots: isolate_real_roots(&polynomial),
                            polynomial,
                        },
                        corank,
                    });
                }
            }
        }
        out
    }

    /// Ranks at two pseudo-random rationals away from every critical value
    /// and every root of a block minor.
    fn certify_generic_rank(&self) -> Vec<(Rational, usize)> {
        let minors: Vec<NuPoly> = self.blocks.iter().map(|b| bareiss(&b.entries).top_minor()).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6772_616d);
        let mut out = Vec::new();
        while out.len() < 2 {
            let q = Rational::new(rng.gen_range(-1000i64..=1000).into(), rng.gen_range(1i64..=97).into());
            if self.is_critical(&q) || minors.iter().any(|m| m.eval(&q).is_zero()) {
                continue;
            }
            let r = self.rank_at(&q);
            assert_eq!(r, self.generic_rank, "rank at a generic value differs from the rank over Q(nu)");
            out.push((q, r));
        }
        out
    }
}

/// Basis of `{ w : w^T G(nu) = 0 }`, each vector re-checked against the
/// full matrix.
pub fn left_kernel_at(g: &GramReport, nu: &Rational) -> Vec<Vec<Rational>> {
    let m = specialize(&g.entries, nu);
    let kernel = m.left_kernel();
    for w in &kernel {
        assert!(m.left_mul(w).iter().all(Zero::is_zero), "left kernel vector fails verification");
    }
    assert_eq!(kernel.len(), g.nrows() - g.rank_at(nu));
    kernel
}
