//! Finite-type root systems and Weyl-group word combinatorics.
//!
//! Roots live in an explicit Euclidean coordinate space (the `ε`-basis):
//! `ℝ^{rank+1}` for series A, `ℝ^{rank}` for B, C, D. The invariant form is
//! a scalar multiple of the dot product, normalized so long roots have
//! squared length 2; every downstream formula is a ratio of pairings and is
//! therefore invariant under rescaling the form (asserted in tests).
//!
//! Weights are stored by their coefficients over the fundamental-weight
//! basis, so `λ(h_i)` for a simple coroot is just the i-th coefficient.

use num_complex::Complex64;
use thiserror::Error;

/// Classical series label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl std::fmt::Display for Series {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Series::A => write!(f, "A"),
            Series::B => write!(f, "B"),
            Series::C => write!(f, "C"),
            Series::D => write!(f, "D"),
        }
    }
}

#[derive(Debug, Error)]
pub enum RootSystemError {
    #[error("unsupported rank {rank} for series {series}: {reason}")]
    UnsupportedRank {
        series: Series,
        rank: usize,
        reason: &'static str,
    },
    #[error("coefficient count {got} does not match rank {rank}")]
    DimensionMismatch { got: usize, rank: usize },
    #[error("word is not reduced: letter {position} produces a repeated or negative root")]
    NonReducedWord { position: usize },
    #[error("vector does not match any root of the system")]
    NotARoot,
}

/// A positive root: coordinates in the `ε`-basis plus its expansion over the
/// simple roots.
#[derive(Debug, Clone)]
pub struct Root {
    pub coords: Vec<f64>,
    pub simple_coeffs: Vec<i32>,
    pub height: i32,
}

impl Root {
    /// Render as a combination of simple roots, e.g. `a1+a2` or `a1+2*a2`.
    pub fn label(&self) -> String {
        let mut s = String::new();
        for (i, &c) in self.simple_coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            if c == 1 {
                s.push_str(&format!("a{}", i + 1));
            } else {
                s.push_str(&format!("{}*a{}", c, i + 1));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// Weyl-group element given as a word in simple reflections.
///
/// Letters are 0-based simple-root indices. The word `[i1, ..., in]` stands
/// for the product `r_{in} ⋯ r_{i1}` (the first letter acts first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylWord {
    pub letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Which inversion-set enumeration to use for a reduced word `r_n ⋯ r_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InversionConvention {
    /// `β_j = r_n ⋯ r_{j+1}(α_{i_j})`
    Beta,
    /// `τ_j = r_{i_1} ⋯ r_{i_{j-1}}(α_{i_j})`
    Tau,
}

/// Complex-coefficient functional on the Cartan subalgebra, stored over the
/// fundamental-weight basis. `coeffs[i] = λ(h_{α_{i+1}})`.
#[derive(Debug, Clone, PartialEq)]
pub struct Weight {
    pub coeffs: Vec<Complex64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coeffs: vec![Complex64::new(0.0, 0.0); rank],
        }
    }

    pub fn from_fund(coeffs: Vec<Complex64>) -> Self {
        Weight { coeffs }
    }

    pub fn from_fund_real(coeffs: &[f64]) -> Self {
        Weight {
            coeffs: coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im == 0.0)
    }

    pub fn scale(&self, s: Complex64) -> Weight {
        Weight {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        Weight {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Evaluation against the i-th simple coroot (0-based).
    pub fn eval_simple_coroot(&self, i: usize) -> Complex64 {
        self.coeffs[i]
    }
}

/// Cartan data for one irreducible classical system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    series: Series,
    rank: usize,
    coord_dim: usize,
    form_scale: f64,
    simple: Vec<Vec<f64>>,
    positive: Vec<Root>,
    cartan: Vec<Vec<i64>>,
    fundamental: Vec<Vec<f64>>,
    weyl_order: u64,
}

/// Builds the standard realization of the requested classical root system.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem, RootSystemError> {
    RootSystem::new(series, rank)
}

impl RootSystem {
    pub fn new(series: Series, rank: usize) -> Result<Self, RootSystemError> {
        let err = |reason| RootSystemError::UnsupportedRank {
            series,
            rank,
            reason,
        };
        match series {
            Series::A => {
                if rank < 1 {
                    return Err(err("series A needs rank >= 1"));
                }
            }
            Series::B | Series::C => {
                if rank < 2 {
                    return Err(err("series B/C need rank >= 2"));
                }
            }
            Series::D => {
                if rank < 3 {
                    return Err(err("series D needs rank >= 3"));
                }
            }
        }

        let coord_dim = match series {
            Series::A => rank + 1,
            _ => rank,
        };
        let mut e = |i: usize, s: f64| -> Vec<f64> {
            let mut v = vec![0.0; coord_dim];
            v[i] = s;
            v
        };
        let diff = |i: usize, j: usize, dim: usize| -> Vec<f64> {
            let mut v = vec![0.0; dim];
            v[i] = 1.0;
            v[j] = -1.0;
            v
        };
        let sum2 = |i: usize, j: usize, dim: usize| -> Vec<f64> {
            let mut v = vec![0.0; dim];
            v[i] = 1.0;
            v[j] = 1.0;
            v
        };

        let mut simple: Vec<Vec<f64>> = Vec::with_capacity(rank);
        let mut positive_vecs: Vec<Vec<f64>> = Vec::new();
        let form_scale;
        match series {
            Series::A => {
                form_scale = 1.0;
                for i in 0..rank {
                    simple.push(diff(i, i + 1, coord_dim));
                }
                for i in 0..coord_dim {
                    for j in (i + 1)..coord_dim {
                        positive_vecs.push(diff(i, j, coord_dim));
                    }
                }
            }
            Series::B => {
                form_scale = 1.0;
                for i in 0..rank - 1 {
                    simple.push(diff(i, i + 1, coord_dim));
                }
                simple.push(e(rank - 1, 1.0));
                for i in 0..rank {
                    for j in (i + 1)..rank {
                        positive_vecs.push(diff(i, j, coord_dim));
                        positive_vecs.push(sum2(i, j, coord_dim));
                    }
                    positive_vecs.push(e(i, 1.0));
                }
            }
            Series::C => {
                // long roots 2ε_i have |·|² = 4 in coordinates; halve the form
                form_scale = 0.5;
                for i in 0..rank - 1 {
                    simple.push(diff(i, i + 1, coord_dim));
                }
                simple.push(e(rank - 1, 2.0));
                for i in 0..rank {
                    for j in (i + 1)..rank {
                        positive_vecs.push(diff(i, j, coord_dim));
                        positive_vecs.push(sum2(i, j, coord_dim));
                    }
                    positive_vecs.push(e(i, 2.0));
                }
            }
            Series::D => {
                form_scale = 1.0;
                for i in 0..rank - 1 {
                    simple.push(diff(i, i + 1, coord_dim));
                }
                simple.push(sum2(rank - 2, rank - 1, coord_dim));
                for i in 0..rank {
                    for j in (i + 1)..rank {
                        positive_vecs.push(diff(i, j, coord_dim));
                        positive_vecs.push(sum2(i, j, coord_dim));
                    }
                }
            }
        }

        // simple-root expansion of each positive root via the Gram system
        let gram = gram_matrix(&simple);
        let mut positive: Vec<Root> = Vec::with_capacity(positive_vecs.len());
        for v in positive_vecs {
            let rhs: Vec<f64> = simple.iter().map(|s| dot(s, &v)).collect();
            let c = solve_symmetric(&gram, &rhs);
            let simple_coeffs: Vec<i32> = c.iter().map(|&x| x.round() as i32).collect();
            for (k, &ci) in simple_coeffs.iter().enumerate() {
                debug_assert!((c[k] - ci as f64).abs() < 1e-9);
            }
            let height = simple_coeffs.iter().sum();
            positive.push(Root {
                coords: v,
                simple_coeffs,
                height,
            });
        }
        // height order, ties broken lexicographically by simple-root coefficients
        positive.sort_by(|a, b| {
            a.height
                .cmp(&b.height)
                .then_with(|| a.simple_coeffs.cmp(&b.simple_coeffs))
        });

        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let v = 2.0 * dot(&simple[i], &simple[j]) / dot(&simple[i], &simple[i]);
                cartan[i][j] = v.round() as i64;
                debug_assert!((v - cartan[i][j] as f64).abs() < 1e-9);
            }
        }

        // fundamental weights: Λ_j = Σ_k (A⁻¹)_{kj} α_k
        let a_f64: Vec<Vec<f64>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| x as f64).collect())
            .collect();
        let mut fundamental = Vec::with_capacity(rank);
        for j in 0..rank {
            let mut rhs = vec![0.0; rank];
            rhs[j] = 1.0;
            let coeff = solve_dense(&a_f64, &rhs);
            let mut w = vec![0.0; coord_dim];
            for (k, &ck) in coeff.iter().enumerate() {
                for (d, wd) in w.iter_mut().enumerate() {
                    *wd += ck * simple[k][d];
                }
            }
            fundamental.push(w);
        }

        let weyl_order = match series {
            Series::A => factorial(rank as u64 + 1),
            Series::B | Series::C => (1u64 << rank) * factorial(rank as u64),
            Series::D => (1u64 << (rank - 1)) * factorial(rank as u64),
        };

        Ok(RootSystem {
            series,
            rank,
            coord_dim,
            form_scale,
            simple,
            positive,
            cartan,
            fundamental,
            weyl_order,
        })
    }

    /// Same system with the invariant form multiplied by `c > 0`. All ratio
    /// formulas must be unchanged under this.
    pub fn with_form_scaled(&self, c: f64) -> RootSystem {
        assert!(c > 0.0);
        let mut rs = self.clone();
        rs.form_scale *= c;
        rs
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coord_dim(&self) -> usize {
        self.coord_dim
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Vec<f64>] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    pub fn fundamental_weight_coords(&self, j: usize) -> &[f64] {
        &self.fundamental[j]
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    /// Half the sum of positive roots; its fundamental coefficients are all 1.
    pub fn weyl_vector(&self) -> Weight {
        Weight::from_fund_real(&vec![1.0; self.rank])
    }

    /// `2δ`, the sum of the positive roots.
    pub fn double_weyl_vector(&self) -> Weight {
        Weight::from_fund_real(&vec![2.0; self.rank])
    }

    /// Weight from coefficients over the simple roots: `λ = Σ s_i α_i`.
    pub fn weight_from_root_coeffs(&self, s: &[Complex64]) -> Result<Weight, RootSystemError> {
        if s.len() != self.rank {
            return Err(RootSystemError::DimensionMismatch {
                got: s.len(),
                rank: self.rank,
            });
        }
        // λ(h_j) = Σ_i s_i α_i(h_j) = Σ_i A[j][i] s_i
        let coeffs = (0..self.rank)
            .map(|j| {
                (0..self.rank)
                    .map(|i| Complex64::new(self.cartan[j][i] as f64, 0.0) * s[i])
                    .sum()
            })
            .collect();
        Ok(Weight { coeffs })
    }

    pub fn weight_from_root_coeffs_real(&self, s: &[f64]) -> Result<Weight, RootSystemError> {
        let c: Vec<Complex64> = s.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        self.weight_from_root_coeffs(&c)
    }

    /// ε-coordinates of a weight (complex, length `coord_dim`).
    pub fn weight_coords(&self, w: &Weight) -> Vec<Complex64> {
        assert_eq!(w.coeffs.len(), self.rank);
        let mut v = vec![Complex64::new(0.0, 0.0); self.coord_dim];
        for (j, c) in w.coeffs.iter().enumerate() {
            for (d, vd) in v.iter_mut().enumerate() {
                *vd += c * self.fundamental[j][d];
            }
        }
        v
    }

    /// Invariant form on two coordinate vectors.
    pub fn form(&self, x: &[f64], y: &[f64]) -> f64 {
        self.form_scale * dot(x, y)
    }

    /// `⟨λ, α⟩` for a weight and a root (complex bilinear in the weight).
    pub fn pair_weight_root(&self, w: &Weight, alpha: &Root) -> Complex64 {
        let wc = self.weight_coords(w);
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, &a) in wc.iter().zip(alpha.coords.iter()) {
            acc += c * a;
        }
        acc * self.form_scale
    }

    /// `λ(h_α) = 2⟨λ,α⟩ / ⟨α,α⟩` for any root `α`.
    pub fn eval_coroot(&self, w: &Weight, alpha: &Root) -> Complex64 {
        let num = self.pair_weight_root(w, alpha);
        let den = self.form(&alpha.coords, &alpha.coords);
        num * (2.0 / den)
    }

    /// Expansion of the coroot `h_α` over the simple coroots `h_i`; for a
    /// root `α = Σ c_i α_i` the coefficients are `c_i ⟨α_i,α_i⟩ / ⟨α,α⟩`.
    pub fn coroot_expansion(&self, alpha: &Root) -> Vec<f64> {
        let aa = self.form(&alpha.coords, &alpha.coords);
        alpha
            .simple_coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c as f64 * self.form(&self.simple[i], &self.simple[i]) / aa)
            .collect()
    }

    /// Simple reflection `s_i` applied to a coordinate vector.
    pub fn reflect_simple(&self, i: usize, v: &[f64]) -> Vec<f64> {
        let a = &self.simple[i];
        let t = 2.0 * dot(v, a) / dot(a, a);
        v.iter().zip(a.iter()).map(|(&x, &ai)| x - t * ai).collect()
    }

    /// Look up a positive root by its coordinate vector.
    pub fn find_positive_root(&self, v: &[f64]) -> Option<&Root> {
        self.positive.iter().find(|r| {
            r.coords
                .iter()
                .zip(v.iter())
                .all(|(&a, &b)| (a - b).abs() < 1e-8)
        })
    }

    /// Inversion roots of a reduced word under the requested convention.
    ///
    /// Errors with `NonReducedWord` if the word produces a negative or
    /// repeated root.
    pub fn inversion_roots(
        &self,
        word: &WeylWord,
        convention: InversionConvention,
    ) -> Result<Vec<Root>, RootSystemError> {
        let n = word.letters.len();
        let mut out: Vec<Root> = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = self.simple[word.letters[j]].clone();
            match convention {
                InversionConvention::Tau => {
                    // τ_j = r_{i_1} ⋯ r_{i_{j-1}} (α_{i_j}); innermost first
                    for k in (0..j).rev() {
                        v = self.reflect_simple(word.letters[k], &v);
                    }
                }
                InversionConvention::Beta => {
                    // β_j = r_{i_n} ⋯ r_{i_{j+1}} (α_{i_j})
                    for k in (j + 1)..n {
                        v = self.reflect_simple(word.letters[k], &v);
                    }
                }
            }
            let root = self
                .find_positive_root(&v)
                .ok_or(RootSystemError::NonReducedWord { position: j })?;
            if out
                .iter()
                .any(|r: &Root| r.simple_coeffs == root.simple_coeffs)
            {
                return Err(RootSystemError::NonReducedWord { position: j });
            }
            out.push(root.clone());
        }
        Ok(out)
    }

    /// A reduced word for the longest element, found by greedy descent of
    /// the Weyl vector to the antidominant chamber.
    pub fn longest_word(&self) -> WeylWord {
        let mut v = self.weight_coords_real(&self.weyl_vector());
        let mut letters = Vec::with_capacity(self.positive.len());
        loop {
            let mut found = None;
            for (i, a) in self.simple.iter().enumerate() {
                if dot(&v, a) > 1e-9 {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => {
                    v = self.reflect_simple(i, &v);
                    letters.push(i);
                }
                None => break,
            }
        }
        debug_assert_eq!(letters.len(), self.positive.len());
        WeylWord::new(letters)
    }

    fn weight_coords_real(&self, w: &Weight) -> Vec<f64> {
        self.weight_coords(w).iter().map(|c| c.re).collect()
    }

    /// Orbit of the Weyl vector under simple reflections; equals the Weyl
    /// group order for a regular starting vector. Intended for small-rank
    /// verification of `weyl_order`.
    pub fn weyl_orbit_size(&self, cap: usize) -> usize {
        let start = self.weight_coords_real(&self.weyl_vector());
        let key = |v: &[f64]| -> Vec<i64> { v.iter().map(|&x| (x * 1024.0).round() as i64).collect() };
        let mut seen = std::collections::HashSet::new();
        let mut queue = std::collections::VecDeque::new();
        seen.insert(key(&start));
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            if seen.len() > cap {
                break;
            }
            for i in 0..self.rank {
                let w = self.reflect_simple(i, &v);
                if seen.insert(key(&w)) {
                    queue.push_back(w);
                }
            }
        }
        seen.len()
    }
}

/// Order of the Weyl group.
pub fn weyl_group_order(rs: &RootSystem) -> u64 {
    rs.weyl_order()
}

fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y.iter()).map(|(a, b)| a * b).sum()
}

fn gram_matrix(vs: &[Vec<f64>]) -> Vec<Vec<f64>> {
    vs.iter()
        .map(|a| vs.iter().map(|b| dot(a, b)).collect())
        .collect()
}

fn solve_symmetric(m: &[Vec<f64>], rhs: &[f64]) -> Vec<f64> {
    solve_dense(m, rhs)
}

/// Gaussian elimination with partial pivoting; systems here are tiny.
fn solve_dense(m: &[Vec<f64>], rhs: &[f64]) -> Vec<f64> {
    let n = rhs.len();
    let mut a: Vec<Vec<f64>> = m.iter().map(|r| r.clone()).collect();
    let mut b = rhs.to_vec();
    for k in 0..n {
        let piv = (k..n)
            .max_by(|&i, &j| a[i][k].abs().partial_cmp(&a[j][k].abs()).unwrap())
            .unwrap();
        a.swap(k, piv);
        b.swap(k, piv);
        let p = a[k][k];
        assert!(p.abs() > 1e-12, "singular system");
        for i in (k + 1)..n {
            let f = a[i][k] / p;
            for j in k..n {
                let akj = a[k][j];
                a[i][j] -= f * akj;
            }
            b[i] -= f * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let mut s = b[k];
        for j in (k + 1)..n {
            s -= a[k][j] * x[j];
        }
        x[k] = s / a[k][k];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn a1_data() {
        let rs = build_root_system(Series::A, 1).unwrap();
        assert_eq!(rs.num_positive_roots(), 1);
        assert_eq!(rs.weyl_order(), 2);
        // δ = α/2: the fundamental coefficient of δ is 1 and ⟨δ,α⟩ = 1
        let delta = rs.weyl_vector();
        let alpha = &rs.positive_roots()[0];
        assert_relative_eq!(rs.pair_weight_root(&delta, alpha).re, 1.0, epsilon = 1e-12);
        assert_relative_eq!(rs.form(&alpha.coords, &alpha.coords), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn a2_data() {
        let rs = build_root_system(Series::A, 2).unwrap();
        assert_eq!(rs.num_positive_roots(), 3);
        assert_eq!(rs.weyl_order(), 6);
        let labels: Vec<String> = rs.positive_roots().iter().map(|r| r.label()).collect();
        assert!(labels.contains(&"a1".to_string()));
        assert!(labels.contains(&"a2".to_string()));
        assert!(labels.contains(&"a1+a2".to_string()));
    }

    #[test]
    fn a3_data() {
        let rs = build_root_system(Series::A, 3).unwrap();
        assert_eq!(rs.num_positive_roots(), 6);
        assert_eq!(rs.weyl_order(), 24);
    }

    #[test]
    fn bcd_data() {
        let b2 = build_root_system(Series::B, 2).unwrap();
        assert_eq!(b2.num_positive_roots(), 4);
        assert_eq!(b2.weyl_order(), 8);
        let c3 = build_root_system(Series::C, 3).unwrap();
        assert_eq!(c3.num_positive_roots(), 9);
        assert_eq!(c3.weyl_order(), 48);
        let d4 = build_root_system(Series::D, 4).unwrap();
        assert_eq!(d4.num_positive_roots(), 12);
        assert_eq!(d4.weyl_order(), 192);
        // long-root normalization across series
        for rs in [&b2, &c3, &d4] {
            let max_len = rs
                .positive_roots()
                .iter()
                .map(|r| rs.form(&r.coords, &r.coords))
                .fold(0.0f64, f64::max);
            assert_relative_eq!(max_len, 2.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn rejects_unsupported() {
        assert!(build_root_system(Series::A, 0).is_err());
        assert!(build_root_system(Series::B, 1).is_err());
        assert!(build_root_system(Series::C, 1).is_err());
        assert!(build_root_system(Series::D, 2).is_err());
    }

    #[test]
    fn delta_and_fundamental_duality() {
        for (series, rank) in [
            (Series::A, 3),
            (Series::B, 3),
            (Series::C, 2),
            (Series::D, 4),
        ] {
            let rs = build_root_system(series, rank).unwrap();
            // δ(h_i) = 1 for all simple coroots; Λ_j(h_i) = δ_ij
            let delta = rs.weyl_vector();
            for i in 0..rank {
                let ai = rs.find_positive_root(&rs.simple_roots()[i].clone()).unwrap();
                assert_relative_eq!(rs.eval_coroot(&delta, ai).re, 1.0, epsilon = 1e-10);
                for j in 0..rank {
                    let mut coeffs = vec![0.0; rank];
                    coeffs[j] = 1.0;
                    let lj = Weight::from_fund_real(&coeffs);
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert_relative_eq!(rs.eval_coroot(&lj, ai).re, expect, epsilon = 1e-10);
                }
            }
            // δ is half the sum of positive roots
            let mut sum = vec![0.0; rs.coord_dim()];
            for r in rs.positive_roots() {
                for (d, s) in sum.iter_mut().enumerate() {
                    *s += r.coords[d];
                }
            }
            let delta_coords = rs.weight_coords(&delta);
            for d in 0..rs.coord_dim() {
                assert_relative_eq!(delta_coords[d].re, sum[d] / 2.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn pairing_examples() {
        // ⟨δ, α_i⟩ = 1 in A2
        let a2 = build_root_system(Series::A, 2).unwrap();
        let delta = a2.weyl_vector();
        for i in 0..2 {
            let ai = a2.find_positive_root(&a2.simple_roots()[i].clone()).unwrap();
            assert_relative_eq!(a2.pair_weight_root(&delta, ai).re, 1.0, epsilon = 1e-12);
        }
        // ⟨2δ, α1+α2⟩ = 4 in A2
        let theta = a2
            .positive_roots()
            .iter()
            .find(|r| r.height == 2)
            .unwrap()
            .clone();
        let two_delta = a2.double_weyl_vector();
        assert_relative_eq!(a2.pair_weight_root(&two_delta, &theta).re, 4.0, epsilon = 1e-12);

        // ⟨δ − i s α, α⟩ = 1 − 2is in A1
        let a1 = build_root_system(Series::A, 1).unwrap();
        let s = 0.7;
        let alpha = a1.positive_roots()[0].clone();
        let lam = a1
            .weight_from_root_coeffs(&[c(0.0, -s)])
            .unwrap()
            .add(&a1.weyl_vector());
        let got = a1.pair_weight_root(&lam, &alpha);
        assert_relative_eq!(got.re, 1.0, epsilon = 1e-12);
        assert_relative_eq!(got.im, -2.0 * s, epsilon = 1e-12);
    }

    #[test]
    fn longest_words() {
        let a1 = build_root_system(Series::A, 1).unwrap();
        assert_eq!(a1.longest_word().letters, vec![0]);

        let a2 = build_root_system(Series::A, 2).unwrap();
        let w0 = a2.longest_word();
        assert_eq!(w0.len(), 3);
        let inv = a2.inversion_roots(&w0, InversionConvention::Beta).unwrap();
        assert_eq!(inv.len(), 3);

        let a3 = build_root_system(Series::A, 3).unwrap();
        let w0 = a3.longest_word();
        assert_eq!(w0.len(), 6);
        // inversion set of the longest word covers all positive roots
        for conv in [InversionConvention::Beta, InversionConvention::Tau] {
            let inv = a3.inversion_roots(&w0, conv).unwrap();
            let mut got: Vec<Vec<i32>> = inv.iter().map(|r| r.simple_coeffs.clone()).collect();
            got.sort();
            let mut want: Vec<Vec<i32>> = a3
                .positive_roots()
                .iter()
                .map(|r| r.simple_coeffs.clone())
                .collect();
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn inversion_conventions_a2() {
        let a2 = build_root_system(Series::A, 2).unwrap();
        let word = WeylWord::new(vec![0, 1, 0]);
        let beta = a2.inversion_roots(&word, InversionConvention::Beta).unwrap();
        assert_eq!(
            beta.iter().map(|r| r.label()).collect::<Vec<_>>(),
            vec!["a2", "a1+a2", "a1"]
        );
        let tau = a2.inversion_roots(&word, InversionConvention::Tau).unwrap();
        assert_eq!(
            tau.iter().map(|r| r.label()).collect::<Vec<_>>(),
            vec!["a1", "a1+a2", "a2"]
        );

        let a1 = build_root_system(Series::A, 1).unwrap();
        let w = WeylWord::new(vec![0]);
        let inv = a1.inversion_roots(&w, InversionConvention::Beta).unwrap();
        assert_eq!(inv[0].label(), "a1");
    }

    #[test]
    fn non_reduced_word_detected() {
        let a2 = build_root_system(Series::A, 2).unwrap();
        let word = WeylWord::new(vec![0, 0]);
        assert!(matches!(
            a2.inversion_roots(&word, InversionConvention::Tau),
            Err(RootSystemError::NonReducedWord { .. })
        ));
        assert!(matches!(
            a2.inversion_roots(&word, InversionConvention::Beta),
            Err(RootSystemError::NonReducedWord { .. })
        ));
    }

    #[test]
    fn weyl_order_matches_orbit_enumeration() {
        for (series, rank) in [
            (Series::A, 2),
            (Series::A, 3),
            (Series::B, 2),
            (Series::C, 3),
            (Series::D, 3),
        ] {
            let rs = build_root_system(series, rank).unwrap();
            assert_eq!(rs.weyl_orbit_size(100_000), rs.weyl_order() as usize);
        }
    }

    #[test]
    fn weight_conversion_round_trip() {
        let a3 = build_root_system(Series::A, 3).unwrap();
        let lam = a3.weight_from_root_coeffs_real(&[0.3, -1.2, 0.9]).unwrap();
        // pair against each simple root both ways
        for i in 0..3 {
            let ai = a3.find_positive_root(&a3.simple_roots()[i].clone()).unwrap();
            let via_coroot = a3.eval_coroot(&lam, ai);
            assert_relative_eq!(via_coroot.re, lam.coeffs[i].re, epsilon = 1e-10);
        }
    }
}
