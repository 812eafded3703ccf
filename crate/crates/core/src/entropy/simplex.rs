//! Dense primal simplex in exact arithmetic.
//!
//! Solves `maximize c.x subject to A x <= b, x >= 0` with every `b_i >= 0`,
//! so the slack basis is feasible and no phase-1 is needed.
//!
//! Arithmetic is fraction-free integer pivoting: the tableau holds integers
//! over one common positive denominator (the previous pivot element), and
//! each pivot step `T' = (p T - col x row) / d` divides exactly, every entry
//! being a subdeterminant of the integerized input. This avoids a gcd per
//! operation while staying exact; rationals appear only at the interface.
//!
//! Pivoting uses Dantzig's rule for speed and falls back to Bland's rule
//! after a run of degenerate pivots, which rules out cycling.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// One row `sum coeffs <= rhs` with `rhs >= 0`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<(usize, BigRational)>,
    pub rhs: BigRational,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub value: BigRational,
    pub point: Vec<BigRational>,
}

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
const STALL_LIMIT: usize = 40;

pub fn maximize(num_vars: usize, objective: &[BigRational], constraints: &[Constraint]) -> Result<LpSolution> {
    assert_eq!(objective.len(), num_vars);
    let m = constraints.len();
    let cols = num_vars + m; // structural + slack
    let rhs_col = cols;

    // Integerize: scale each constraint row by the lcm of its denominators
    // (rows scale freely), and the objective row by its own lcm.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    for (i, c) in constraints.iter().enumerate() {
        if c.rhs.is_negative() {
            return Err(Error::internal("simplex requires nonnegative right-hand sides"));
        }
        let mut scale = c.rhs.denom().clone();
        for (j, coeff) in &c.coeffs {
            assert!(*j < num_vars, "constraint names variable {j} of {num_vars}");
            scale = scale.lcm(coeff.denom());
        }
        let mut row = vec![BigInt::zero(); cols + 1];
        for (j, coeff) in &c.coeffs {
            row[*j] += coeff.numer() * (&scale / coeff.denom());
        }
        row[num_vars + i] = scale.clone();
        row[rhs_col] = c.rhs.numer() * (&scale / c.rhs.denom());
        rows.push(row);
    }
    let obj_scale = objective.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    // cost row, last entry accumulates -objective * denominator
    let mut cost: Vec<BigInt> = vec![BigInt::zero(); cols + 1];
    for (j, c) in objective.iter().enumerate() {
        cost[j] = c.numer() * (&obj_scale / c.denom());
    }

    let mut denom = BigInt::one(); // common positive denominator of `rows`
    let mut basis: Vec<usize> = (num_vars..cols).collect();

    let mut bland = false;
    let mut stall = 0usize;
    let mut iterations = 0usize;
    loop {
        iterations += 1;
        if iterations > 500_000 {
            return Err(Error::internal("simplex iteration limit hit"));
        }

        let entering = if bland {
            (0..cols).find(|&j| cost[j].is_positive())
        } else {
            let mut best: Option<usize> = None;
            for j in 0..cols {
                if cost[j].is_positive() && best.is_none_or(|b| cost[j] > cost[b]) {
                    best = Some(j);
                }
            }
            best
        };
        let Some(e) = entering else {
            // optimal: x[basic] = row_rhs / denom, objective = -cost_rhs / (denom * obj_scale)
            let mut point = vec![BigRational::zero(); num_vars];
            for (i, &b) in basis.iter().enumerate() {
                if b < num_vars {
                    point[b] = BigRational::new(rows[i][rhs_col].clone(), denom.clone());
                }
            }
            let value = BigRational::new(-cost[rhs_col].clone(), &denom * &obj_scale);
            return Ok(LpSolution { value, point });
        };

        // ratio test on b_i / a_ie; ties toward the smallest basis variable,
        // which together with first-positive entering is exactly Bland's rule
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !rows[i][e].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let cur = &rows[i][rhs_col] * &rows[l][e];
                    let old = &rows[l][rhs_col] * &rows[i][e];
                    cur < old || (cur == old && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        let Some(l) = leave else {
            return Err(Error::internal("simplex found the LP unbounded"));
        };

        let degenerate = rows[l][rhs_col].is_zero();
        if degenerate {
            stall += 1;
            if stall > STALL_LIMIT {
                bland = true;
            }
        } else {
            stall = 0;
            bland = false;
        }

        // fraction-free pivot on (l, e): row l is kept verbatim and its pivot
        // entry becomes the new common denominator; every other row r gets
        // r' = (pivot * r - r[e] * row_l) / denom, an exact division
        let pivot = rows[l][e].clone();
        debug_assert!(pivot.is_positive());
        let pivot_row = rows[l].clone();
        let update = |row: &mut Vec<BigInt>, denom: &BigInt| {
            let factor = row[e].clone();
            if factor.is_zero() {
                for x in row.iter_mut() {
                    if !x.is_zero() {
                        let num = &*x * &pivot;
                        debug_assert!((&num % denom).is_zero());
                        *x = num / denom;
                    }
                }
            } else {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    let num = &*x * &pivot - &factor * p;
                    debug_assert!((&num % denom).is_zero());
                    *x = num / denom;
                }
            }
        };
        for i in 0..m {
            if i != l {
                update(&mut rows[i], &denom);
            }
        }
        update(&mut cost, &denom);
        denom = pivot;
        basis[l] = e;
    }
}
