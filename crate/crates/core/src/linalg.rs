//! Dense matrices over a single cyclotomic field.

use std::fmt;

use crate::cyclo::{lcm_u32, CycNum, MAX_FIELD_INDEX};
use crate::error::{Error, Result};

pub type Vector = Vec<CycNum>;

/// Row-major matrix whose entries all live in the same field.
#[derive(Clone)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: u32,
    data: Vec<CycNum>,
}

/// Result of [`Mat::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Smallest index that every entry's field divides.
fn common_index<'a>(entries: impl IntoIterator<Item = &'a CycNum>) -> Result<u32> {
    let mut n = 1u32;
    for e in entries {
        n = lcm_u32(n, e.field_index());
        if n > MAX_FIELD_INDEX {
            return Err(Error::Domain(format!("entries need field index {n}")));
        }
    }
    Ok(n)
}

fn pair_index(a: u32, b: u32) -> Result<u32> {
    if b % a == 0 {
        Ok(b)
    } else if a % b == 0 {
        Ok(a)
    } else {
        Err(Error::Domain(format!(
            "no embedding between Q(zeta_{a}) and Q(zeta_{b})"
        )))
    }
}

impl Mat {
    /// Builds a matrix, embedding all entries into the smallest common field.
    pub fn new(rows: usize, cols: usize, data: Vec<CycNum>) -> Result<Mat> {
        if rows * cols != data.len() || rows == 0 || cols == 0 {
            return Err(Error::Precondition(format!(
                "{} entries do not fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let n = common_index(&data)?;
        let data = data
            .into_iter()
            .map(|e| e.embed(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat {
            rows,
            cols,
            field: n,
            data,
        })
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Precondition("ragged rows".into()));
        }
        Mat::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Parses rows of number literals.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Mat> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| CycNum::parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Mat::from_rows(parsed)
    }

    pub fn zeros(rows: usize, cols: usize, n: u32) -> Mat {
        Mat {
            rows,
            cols,
            field: n,
            data: vec![CycNum::zero(n); rows * cols],
        }
    }

    pub fn identity(size: usize, n: u32) -> Mat {
        Mat::scalar(size, &CycNum::one(n))
    }

    pub fn scalar(size: usize, c: &CycNum) -> Mat {
        let mut m = Mat::zeros(size, size, c.field_index());
        for k in 0..size {
            m.data[k * size + k] = c.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field_index(&self) -> u32 {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &CycNum {
        &self.data[r * self.cols + c]
    }

    /// Sets an entry; the value must embed into the matrix field.
    pub fn set(&mut self, r: usize, c: usize, v: CycNum) -> Result<()> {
        self.data[r * self.cols + c] = v.embed(self.field)?;
        Ok(())
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.data
    }

    pub fn row(&self, r: usize) -> Vector {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn embed(&self, m: u32) -> Result<Mat> {
        if m == self.field {
            return Ok(self.clone());
        }
        let data = self
            .data
            .iter()
            .map(|e| e.embed(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            field: m,
            data,
        })
    }

    pub fn map(&self, f: impl Fn(&CycNum) -> CycNum) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Mat {
            rows: self.cols,
            cols: self.rows,
            field: self.field,
            data,
        }
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Precondition(format!(
                "shape mismatch {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let n = pair_index(self.field, other.field)?;
        let a = self.embed(n)?;
        let b = other.embed(n)?;
        let mut data = Vec::with_capacity(a.rows * b.cols);
        for r in 0..a.rows {
            for c in 0..b.cols {
                let mut acc = CycNum::zero(n);
                for k in 0..a.cols {
                    let x = a.get(r, k);
                    let y = b.get(k, c);
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
                data.push(acc);
            }
        }
        Ok(Mat {
            rows: a.rows,
            cols: b.cols,
            field: n,
            data,
        })
    }

    /// Panicking product, for matrices known to be compatible.
    pub fn mul(&self, other: &Mat) -> Mat {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    fn zip_with(&self, other: &Mat, sub: bool) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Precondition("shape mismatch".into()));
        }
        let n = pair_index(self.field, other.field)?;
        let (a, b) = (self.embed(n)?, other.embed(n)?);
        let data = a
            .data
            .iter()
            .zip(&b.data)
            .map(|(x, y)| if sub { x - y } else { x + y })
            .collect();
        Ok(Mat {
            rows: a.rows,
            cols: a.cols,
            field: n,
            data,
        })
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.zip_with(other, false)
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.zip_with(other, true)
    }

    pub fn scale(&self, c: &CycNum) -> Result<Mat> {
        let n = pair_index(self.field, c.field_index())?;
        let a = self.embed(n)?;
        let c = c.embed(n)?;
        Ok(a.map(|e| e * &c))
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Result<Vector> {
        let col = Mat::new(v.len(), 1, v.to_vec())?;
        Ok(self.try_mul(&col)?.data)
    }

    pub fn pow(&self, e: u64) -> Mat {
        let mut acc = Mat::identity(self.rows, self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value().is_some_and(|c| c.is_one())
    }

    /// The scalar c when the matrix equals c·I.
    pub fn scalar_value(&self) -> Option<CycNum> {
        if !self.is_square() {
            return None;
        }
        let c = self.get(0, 0);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let e = self.get(r, k);
                let ok = if r == k { e == c } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Mat {
        self.map(CycNum::conjugate)
    }

    /// Reduced row echelon form; the pivot is the first nonzero entry found
    /// scanning the remaining rows top to bottom in the current column.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(prow, r);
            let inv = m.get(prow, col).inverse().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(prow, c) * &inv;
                m.data[prow * m.cols + c] = v;
            }
            for r2 in 0..m.rows {
                if r2 == prow {
                    continue;
                }
                let f = m.get(r2, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let p = m.get(prow, c);
                    if p.is_zero() {
                        continue;
                    }
                    let v = m.get(r2, c) - &(&f * p);
                    m.data[r2 * m.cols + c] = v;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Echelon {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel; one vector per free column, with a 1 in that column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let e = self.rref();
        let n = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![CycNum::zero(n); self.cols];
                v[fc] = CycNum::one(n);
                for (r, &pc) in e.pivots.iter().enumerate() {
                    v[pc] = -e.matrix.get(r, fc);
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<CycNum> {
        if !self.is_square() {
            return Err(Error::Precondition("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let size = m.rows;
        let mut det = CycNum::one(self.field);
        for col in 0..size {
            let Some(r) = (col..size).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(CycNum::zero(self.field));
            };
            if r != col {
                m.swap_rows(r, col);
                det = -det;
            }
            let p = m.get(col, col).clone();
            det = &det * &p;
            let inv = p.inverse()?;
            for r2 in col + 1..size {
                let f = m.get(r2, col) * &inv;
                if f.is_zero() {
                    continue;
                }
                for c in col..size {
                    let v = m.get(r2, c) - &(&f * m.get(col, c));
                    m.data[r2 * size + c] = v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Precondition("inverse of a non-square matrix".into()));
        }
        let size = self.rows;
        let mut aug = Mat::zeros(size, 2 * size, self.field);
        for r in 0..size {
            for c in 0..size {
                aug.data[r * 2 * size + c] = self.get(r, c).clone();
            }
            aug.data[r * 2 * size + size + r] = CycNum::one(self.field);
        }
        let e = aug.rref();
        if e.pivots.iter().take(size).copied().ne(0..size) || e.rank < size {
            return Err(Error::DivisionByZero);
        }
        let mut data = Vec::with_capacity(size * size);
        for r in 0..size {
            for c in 0..size {
                data.push(e.matrix.get(r, size + c).clone());
            }
        }
        Ok(Mat {
            rows: size,
            cols: size,
            field: self.field,
            data,
        })
    }

    /// Eigenspaces of a matrix of finite order dividing `order`, computed in
    /// Q(ζ_l) with l = lcm(field index, order). Raw eigenvalues are reported;
    /// no scalar normalisation is applied.
    pub fn eigen_lines(&self, order: u32) -> Result<Vec<(CycNum, Vec<Vector>)>> {
        if !self.is_square() || order == 0 {
            return Err(Error::Precondition("eigen_lines needs a square matrix and order >= 1".into()));
        }
        if !self.pow(order as u64).is_identity() {
            return Err(Error::Precondition(format!(
                "matrix does not satisfy M^{order} = I"
            )));
        }
        let l = lcm_u32(self.field, order);
        if l > MAX_FIELD_INDEX {
            return Err(Error::Domain(format!("eigenvalues need field index {l}")));
        }
        let m = self.embed(l)?;
        let mut out = Vec::new();
        let mut total = 0;
        for k in 0..order {
            let lambda = CycNum::root_of_unity(l, (k * (l / order)) as i64);
            let shifted = m.try_sub(&Mat::scalar(self.rows, &lambda))?;
            let ker = shifted.kernel_basis();
            if !ker.is_empty() {
                total += ker.len();
                out.push((lambda, ker));
            }
        }
        if total != self.rows {
            return Err(Error::Internal(format!(
                "eigenspaces of a finite-order matrix span {total} of {} dimensions",
                self.rows
            )));
        }
        Ok(out)
    }

    pub fn encode_into(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&(self.rows as u32).to_le_bytes());
        out.extend_from_slice(&(self.cols as u32).to_le_bytes());
        for e in &self.data {
            e.encode_into(out);
        }
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut v = Vec::new();
        self.encode_into(&mut v);
        v
    }
}

impl PartialEq for Mat {
    /// Entrywise equality; matrices over different fields compare in a common field.
    fn eq(&self, other: &Mat) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Mat {}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[{}]\n{}", self.rows, self.cols, self.field, self)
    }
}

/// Dot product of two coordinate vectors.
pub fn dot(a: &[CycNum], b: &[CycNum]) -> CycNum {
    let mut acc = CycNum::zero(a[0].field_index());
    for (x, y) in a.iter().zip(b) {
        acc = &acc + &(x * y);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(v: &[i64]) -> Mat {
        let mut m = Mat::zeros(v.len(), v.len(), 1);
        for (k, &x) in v.iter().enumerate() {
            m.set(k, k, CycNum::from_int(1, x)).unwrap();
        }
        m
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Mat::identity(4, 4);
        let e = id.rref();
        assert_eq!(e.matrix, id);
        assert_eq!(e.rank, 4);
        let z = Mat::zeros(4, 4, 4);
        assert_eq!(z.rref().rank, 0);
        assert_eq!(z.kernel_basis().len(), 4);
        assert!(id.kernel_basis().is_empty());
    }

    #[test]
    fn two_points_span_a_line() {
        let m = Mat::parse_rows(&[&["0", "i", "1", "0"], &["1", "0", "0", "-i"]]).unwrap();
        let e = m.rref();
        assert_eq!(e.rank, 2);
        assert_eq!(e.pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_of_diagonal_shift() {
        let t1 = diag(&[1, 1, -1, -1]);
        let k = t1.try_sub(&Mat::identity(4, 1)).unwrap().kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(v[2].is_zero() && v[3].is_zero());
        }
    }

    #[test]
    fn eigen_lines_of_diagonal_involution() {
        let t1 = diag(&[1, 1, -1, -1]);
        let eig = t1.eigen_lines(2).unwrap();
        assert_eq!(eig.len(), 2);
        assert!(eig.iter().all(|(_, b)| b.len() == 2));
        assert!(diag(&[1, 1, -1, -1]).eigen_lines(1).is_err());
    }

    #[test]
    fn det_and_inverse() {
        let m = Mat::parse_rows(&[&["1", "2"], &["3", "4"]]).unwrap();
        assert_eq!(m.det().unwrap(), CycNum::from_int(1, -2));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = Mat::parse_rows(&[&["1", "i"], &["i", "-1"]]).unwrap();
        assert!(sing.det().unwrap().is_zero());
        assert!(sing.inverse().is_err());
    }
}
