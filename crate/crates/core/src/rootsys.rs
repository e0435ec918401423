//! Cartan data and root systems of finite type.
//!
//! Matrices follow the convention `a[i][j] = <alpha_i^vee, alpha_j>`, so the
//! simple reflection `s_i` acts on root coordinates by
//! `v -> v - (sum_j a[i][j] v_j) alpha_i`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest number of positive roots accepted before a Cartan matrix is
/// declared to be of non-finite type. E8 has 120.
pub const MAX_POSITIVE_ROOTS: usize = 400;

/// Largest supported rank; parabolic subsets are stored as bit masks.
pub const MAX_RANK: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    name: Option<String>,
    matrix: Vec<Vec<i32>>,
}

impl CartanDatum {
    /// Validates a raw matrix: square, `2` on the diagonal, non-positive off
    /// the diagonal, and symmetric zero pattern. Finiteness is checked later by
    /// [`RootSystem::new`].
    pub fn from_matrix(matrix: Vec<Vec<i32>>) -> Result<Self> {
        let l = matrix.len();
        if l == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        if l > MAX_RANK {
            return Err(Error::InvalidCartan(format!("rank {l} exceeds {MAX_RANK}")));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != l {
                return Err(Error::InvalidCartan(format!(
                    "row {} has {} entries, expected {l}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::InvalidCartan(format!(
                        "diagonal entry a[{0}][{0}] = {a}, expected 2",
                        i + 1
                    )));
                }
                if i != j && a > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry a[{}][{}] = {a} is positive",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for i in 0..l {
            for j in 0..l {
                if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "a[{}][{}] and a[{}][{}] must vanish together",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(Self { name: None, matrix })
    }

    /// Builds a catalog type from strings like `A3`, `B2`, `G2`, `E6`
    /// (case-insensitive).
    pub fn from_type(name: &str) -> Result<Self> {
        let trimmed = name.trim();
        let unknown = || Error::UnknownCartanType(trimmed.to_string());
        let mut chars = trimmed.chars();
        let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
        let matrix = match (family, rank) {
            ('A', n) if n >= 1 => chain(n),
            ('B', n) if n >= 2 => {
                let mut m = chain(n);
                m[n - 1][n - 2] = -2;
                m
            }
            ('C', n) if n >= 2 => {
                let mut m = chain(n);
                m[n - 2][n - 1] = -2;
                m
            }
            ('D', n) if n >= 4 => {
                let mut m = chain(n);
                m[n - 2][n - 1] = 0;
                m[n - 1][n - 2] = 0;
                m[n - 3][n - 1] = -1;
                m[n - 1][n - 3] = -1;
                m
            }
            ('G', 2) => vec![vec![2, -3], vec![-1, 2]],
            ('F', 4) => {
                let mut m = chain(4);
                m[2][1] = -2;
                m
            }
            ('E', n @ 6..=8) => {
                // Bourbaki labelling: 1-3-4-5-...-n with 2 attached to 4.
                let mut m = vec![vec![0; n]; n];
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] = 2;
                }
                let mut link = |a: usize, b: usize| {
                    m[a - 1][b - 1] = -1;
                    m[b - 1][a - 1] = -1;
                };
                link(1, 3);
                link(2, 4);
                for k in 3..n {
                    link(k, k + 1);
                }
                m
            }
            _ => return Err(unknown()),
        };
        Ok(Self {
            name: Some(format!("{family}{rank}")),
            matrix,
        })
    }

    /// Catalog name if the datum came from [`CartanDatum::from_type`].
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.matrix
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.matrix[i][j]
    }
}

/// Type name when available, otherwise the matrix as `[[2,-1],[-1,2]]`.
impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            return f.write_str(name);
        }
        f.write_str("[")?;
        for (i, row) in self.matrix.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, a) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

fn chain(n: usize) -> Vec<Vec<i32>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn negate(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanDatum,
    positive: Vec<Root>,
}

impl RootSystem {
    pub fn new(cartan: CartanDatum) -> Result<Self> {
        Self::with_bound(cartan, MAX_POSITIVE_ROOTS)
    }

    /// Closes the simple roots under simple reflections, keeping positive
    /// roots only. Fails once more than `bound` positive roots are found.
    pub fn with_bound(cartan: CartanDatum, bound: usize) -> Result<Self> {
        let l = cartan.rank();
        let mut seen: BTreeSet<Root> = BTreeSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..l {
            let r = Root::simple(l, i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(root) = queue.pop_front() {
            for i in 0..l {
                let image = reflect_with(&cartan, i, &root);
                if !image.is_positive() || seen.contains(&image) {
                    continue;
                }
                if seen.len() >= bound {
                    return Err(Error::NotFiniteType { bound });
                }
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
        Ok(Self {
            cartan,
            positive: seen.into_iter().collect(),
        })
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// Positive roots in lexicographic order of their coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        if r.is_positive() {
            self.positive.binary_search(r).is_ok()
        } else if r.is_negative() {
            self.positive.binary_search(&r.negate()).is_ok()
        } else {
            false
        }
    }

    pub fn reflect(&self, i: usize, r: &Root) -> Root {
        reflect_with(&self.cartan, i, r)
    }

    /// In-place version of [`RootSystem::reflect`] on raw coordinates.
    #[inline]
    pub fn reflect_coords(&self, i: usize, v: &mut [i32]) {
        let row = &self.cartan.matrix[i];
        let pairing: i32 = row.iter().zip(v.iter()).map(|(a, c)| a * c).sum();
        v[i] -= pairing;
    }

    /// Matrix of `s_i` acting on coordinate column vectors.
    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<Vec<i32>> {
        let l = self.rank();
        let mut m = vec![vec![0; l]; l];
        for (r, row) in m.iter_mut().enumerate() {
            row[r] = 1;
        }
        for c in 0..l {
            m[i][c] -= self.cartan.matrix[i][c];
        }
        m
    }
}

fn reflect_with(cartan: &CartanDatum, i: usize, r: &Root) -> Root {
    let pairing: i32 = cartan.matrix[i]
        .iter()
        .zip(&r.0)
        .map(|(a, c)| a * c)
        .sum();
    let mut out = r.0.clone();
    out[i] -= pairing;
    Root(out)
}
