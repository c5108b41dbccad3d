use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::slice::SliceBasis;

type Row = Vec<BigInt>;

/// Kernel of `f` and `g` on a slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    /// One primitive integer vector per free column of the reduced echelon
    /// form; a basis over the rationals.
    pub rational: Vec<Row>,
    /// Hermite normal form basis of all integer kernel vectors.
    pub lattice: Vec<Row>,
}

impl KernelBasis {
    pub fn rank(&self) -> usize {
        self.lattice.len()
    }
}

fn to_big(m: &[Vec<i64>]) -> Vec<Row> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn content(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn make_primitive(row: &mut [BigInt]) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Fraction-free reduced echelon form; rows are kept primitive.
/// Returns the surviving rows and their pivot columns.
fn echelon(mut m: Vec<Row>, cols: usize) -> (Vec<Row>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        make_primitive(&mut m[r]);
        let pivot_row = m[r].clone();
        let a = pivot_row[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let b = row[c].clone();
            let g = a.gcd(&b);
            let (sa, sb) = (&a / &g, &b / &g);
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if y.is_zero() && x.is_zero() {
                    continue;
                }
                *x = &*x * &sa - y * &sb;
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

fn rational_kernel(rows: Vec<Row>, cols: usize) -> Vec<Row> {
    let (e, pivots) = echelon(rows, cols);
    let lcm = e
        .iter()
        .zip(&pivots)
        .fold(BigInt::one(), |l, (row, &c)| l.lcm(&row[c]));
    let mut out = Vec::new();
    for j in (0..cols).filter(|j| !pivots.contains(j)) {
        let mut v = vec![BigInt::zero(); cols];
        v[j] = lcm.clone();
        for (row, &c) in e.iter().zip(&pivots) {
            if !row[j].is_zero() {
                v[c] = -(&row[j] * (&lcm / &row[c]));
            }
        }
        make_primitive(&mut v);
        out.push(v);
    }
    out
}

/// Unimodular row reduction of `[A^T | I]`: rows whose left part vanishes
/// carry a basis of the integer kernel of `A`.
fn integer_kernel(a: &[Row], cols: usize) -> Vec<Row> {
    let width = a.len();
    let mut m: Vec<(Row, Row)> = (0..cols)
        .map(|j| {
            let left = a.iter().map(|r| r[j].clone()).collect();
            let mut right = vec![BigInt::zero(); cols];
            right[j] = BigInt::one();
            (left, right)
        })
        .collect();
    let mut r = 0;
    for c in 0..width {
        if r == m.len() {
            break;
        }
        let live: Vec<usize> = (r..m.len()).filter(|&i| !m[i].0[c].is_zero()).collect();
        let Some(&first) = live.first() else { continue };
        m.swap(r, first);
        for &i in live.iter().skip(1) {
            let (a0, b0) = (m[r].0[c].clone(), m[i].0[c].clone());
            if b0.is_zero() {
                continue;
            }
            let eg = a0.extended_gcd(&b0);
            let (x, y) = (eg.x, eg.y);
            let (sa, sb) = (&a0 / &eg.gcd, &b0 / &eg.gcd);
            // every absorbed row sits below the pivot row
            let (lo, hi) = m.split_at_mut(i);
            let (top, bottom) = (&mut lo[r], &mut hi[0]);
            combine(&mut top.0, &mut bottom.0, &x, &y, &sa, &sb);
            combine(&mut top.1, &mut bottom.1, &x, &y, &sa, &sb);
        }
        r += 1;
    }
    m.into_iter().skip(r).map(|(_, right)| right).collect()
}

/// `(p, q) <- (x p + y q, -sb p + sa q)`, a determinant-one move.
fn combine(p: &mut [BigInt], q: &mut [BigInt], x: &BigInt, y: &BigInt, sa: &BigInt, sb: &BigInt) {
    for (u, v) in p.iter_mut().zip(q.iter_mut()) {
        if u.is_zero() && v.is_zero() {
            continue;
        }
        let nu = x * &*u + y * &*v;
        let nv = sa * &*v - sb * &*u;
        *u = nu;
        *v = nv;
    }
}

/// Row Hermite normal form: positive pivots, entries above each pivot
/// reduced into `[0, pivot)`.
pub fn hermite_normal_form(mut m: Vec<Row>) -> Vec<Row> {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        loop {
            let live: Vec<usize> = (r..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
            if live.is_empty() {
                break;
            }
            let p = *live.iter().min_by(|&&i, &&j| m[i][c].abs().cmp(&m[j][c].abs())).expect("nonempty");
            m.swap(r, p);
            if live.len() == 1 || live.iter().all(|&i| i == p) {
                break;
            }
            let pivot = m[r].clone();
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&pivot[c]);
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
                done &= m[i][c].is_zero();
            }
            if done {
                break;
            }
        }
        if (r..m.len()).all(|i| m[i][c].is_zero()) {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot = m[r].clone();
        for i in 0..r {
            let q = m[i][c].div_floor(&pivot[c]);
            if !q.is_zero() {
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Exact kernel of `f` and `g` on the slice.
pub fn kernel_fg(slice: &SliceBasis) -> KernelBasis {
    let cols = slice.generators().len();
    let a = to_big(&slice.stacked());
    let rational = rational_kernel(a.clone(), cols);
    let lattice = hermite_normal_form(integer_kernel(&a, cols));
    KernelBasis { rational, lattice }
}

/// Integer coordinates of `v` in the given HNF basis, if it is a lattice vector.
pub fn lattice_coords(basis: &[Row], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest: Row = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for b in basis {
        let c = b.iter().position(|x| !x.is_zero())?;
        let (q, r) = rest[c].div_rem(&b[c]);
        if !r.is_zero() {
            return None;
        }
        for (x, y) in rest.iter_mut().zip(b) {
            *x -= &q * y;
        }
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}

/// Kernel bases in the chain file format, one block per vector.
pub struct KernelListing<'a> {
    pub slice: &'a SliceBasis,
    pub basis: &'a [Row],
}

impl fmt::Display for KernelListing<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.basis.iter().enumerate() {
            writeln!(f, "# kernel vector {}", i + 1)?;
            match self.slice.chain_of(v) {
                Ok(c) => writeln!(f, "{c}")?,
                Err(e) => writeln!(f, "# {e}")?,
            }
        }
        Ok(())
    }
}
