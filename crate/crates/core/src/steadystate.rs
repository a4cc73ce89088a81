//! Stationary populations of a rate matrix under the trace constraint.
//!
//! The eight balance equations `A ρ = 0` are rank deficient by one. One of
//! them is replaced by `Σ ρ_i = 1` and the resulting system is solved by
//! Gaussian elimination with partial pivoting.

use crate::error::{Error, Result};
use crate::model::BasisState;
use crate::rates::RateMatrix;

/// Roundoff floor for populations: values in `[-NEGATIVE_FLOOR, 0)` are
/// clamped to zero, anything lower is an error.
pub const NEGATIVE_FLOOR: f64 = 1e-12;

/// Pivots at or below `SINGULAR_PIVOT · max|A|` mark the system singular.
/// Metastable states legitimately produce pivots far below `f64::EPSILON`.
const SINGULAR_PIVOT: f64 = f64::MIN_POSITIVE;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Populations {
    rho: [f64; 8],
}

impl Populations {
    pub fn uniform() -> Self {
        Populations { rho: [0.125; 8] }
    }

    /// Wraps a raw population vector; the caller is responsible for the trace.
    pub fn from_array(rho: [f64; 8]) -> Self {
        Populations { rho }
    }

    pub fn get(&self, state: BasisState) -> f64 {
        self.rho[state.slot()]
    }

    pub fn as_array(&self) -> &[f64; 8] {
        &self.rho
    }

    pub fn trace(&self) -> f64 {
        self.rho.iter().sum()
    }
}

/// Populations of the four doubly degenerate groups of the featured
/// configuration: `I = {1,8}`, `II = {2,7}`, `III = {3,6}`, `IV = {4,5}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupedPopulations {
    pub i: f64,
    pub ii: f64,
    pub iii: f64,
    pub iv: f64,
}

impl GroupedPopulations {
    pub fn as_array(&self) -> [f64; 4] {
        [self.i, self.ii, self.iii, self.iv]
    }

    pub fn sum(&self) -> f64 {
        self.i + self.ii + self.iii + self.iv
    }
}

pub fn grouped_populations(rho: &Populations) -> GroupedPopulations {
    let r = &rho.rho;
    GroupedPopulations {
        i: r[0] + r[7],
        ii: r[1] + r[6],
        iii: r[2] + r[5],
        iv: r[3] + r[4],
    }
}

/// Index of the balance row replaced by the trace row: largest `|A_ii|`,
/// lowest index on ties.
pub fn trace_row(a: &RateMatrix) -> usize {
    let e = a.entries();
    let mut best = 0;
    for i in 1..8 {
        if e[i][i].abs() > e[best][best].abs() {
            best = i;
        }
    }
    best
}

pub fn solve_steady_state(a: &RateMatrix) -> Result<Populations> {
    solve_steady_state_replacing(a, trace_row(a))
}

/// Same as [`solve_steady_state`] with an explicit choice of replaced row.
pub fn solve_steady_state_replacing(a: &RateMatrix, row: usize) -> Result<Populations> {
    assert!(row < 8, "row index {row} out of range");
    let mut m = *a.entries();
    let mut rhs = [0.0; 8];
    m[row] = [1.0; 8];
    rhs[row] = 1.0;

    let scale = a.max_abs().max(1.0);
    match gaussian_solve(m, rhs, SINGULAR_PIVOT * scale).map(clamp_and_normalize) {
        Some(Ok(rho)) => Ok(rho),
        // Nearly absorbing states cancel the last pivot to roundoff; the
        // subtraction-free reduction still resolves them.
        lu => state_reduction(a).ok_or(match lu {
            Some(Err(e)) => e,
            _ => Error::NoUniqueSteadyState,
        }),
    }
}

/// Grassmann-Taksar-Heyman state reduction on the off-diagonal rates.
/// `None` when some reduced state has no exit, i.e. the chain is reducible.
fn state_reduction(a: &RateMatrix) -> Option<Populations> {
    let e = a.entries();
    // p[i][j]: rate i -> j
    let mut p = [[0.0; 8]; 8];
    for (i, row) in p.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            if i != j {
                *x = e[j][i];
            }
        }
    }
    let mut exit = [0.0; 8];
    for n in (1..8).rev() {
        let s: f64 = p[n][..n].iter().sum();
        if !(s > 0.0) {
            return None;
        }
        exit[n] = s;
        for i in 0..n {
            let w = p[i][n] / s;
            if w == 0.0 {
                continue;
            }
            for j in 0..n {
                p[i][j] += w * p[n][j];
            }
        }
    }
    let mut x = [0.0; 8];
    x[0] = 1.0;
    for n in 1..8 {
        x[n] = (0..n).map(|i| x[i] * p[i][n]).sum::<f64>() / exit[n];
    }
    if x.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let z: f64 = x.iter().sum();
    Some(Populations {
        rho: x.map(|v| v / z),
    })
}

fn clamp_and_normalize(mut rho: [f64; 8]) -> Result<Populations> {
    for (index, x) in rho.iter_mut().enumerate() {
        if !x.is_finite() {
            return Err(Error::NoUniqueSteadyState);
        }
        if *x < -NEGATIVE_FLOOR {
            return Err(Error::NegativePopulation {
                index: index + 1,
                value: *x,
            });
        }
        if *x < 0.0 {
            *x = 0.0;
        }
    }
    let trace: f64 = rho.iter().sum();
    rho.iter_mut().for_each(|x| *x /= trace);
    Ok(Populations { rho })
}

/// LU factors of an 8×8 matrix from elimination with partial pivoting.
struct Lu {
    lu: [[f64; 8]; 8],
    perm: [usize; 8],
}

impl Lu {
    /// `None` when a pivot falls to `tiny` or below.
    fn factor(mut m: [[f64; 8]; 8], tiny: f64) -> Option<Self> {
        let mut perm = [0, 1, 2, 3, 4, 5, 6, 7];
        for col in 0..8 {
            let pivot = (col..8)
                .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
                .unwrap();
            if !(m[pivot][col].abs() > tiny) {
                return None;
            }
            m.swap(col, pivot);
            perm.swap(col, pivot);
            for r in col + 1..8 {
                let f = m[r][col] / m[col][col];
                m[r][col] = f;
                if f == 0.0 {
                    continue;
                }
                for c in col + 1..8 {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
        Some(Lu { lu: m, perm })
    }

    fn solve(&self, b: &[f64; 8]) -> [f64; 8] {
        let mut y = [0.0; 8];
        for r in 0..8 {
            let head: f64 = (0..r).map(|c| self.lu[r][c] * y[c]).sum();
            y[r] = b[self.perm[r]] - head;
        }
        let mut x = [0.0; 8];
        for r in (0..8).rev() {
            let tail: f64 = (r + 1..8).map(|c| self.lu[r][c] * x[c]).sum();
            x[r] = (y[r] - tail) / self.lu[r][r];
        }
        x
    }
}

/// Dense solve with partial pivoting. `None` when a pivot falls to `tiny` or below.
fn gaussian_solve(m: [[f64; 8]; 8], b: [f64; 8], tiny: f64) -> Option<[f64; 8]> {
    Lu::factor(m, tiny).map(|lu| lu.solve(&b))
}
