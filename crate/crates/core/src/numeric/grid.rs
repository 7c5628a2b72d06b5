use std::io::Read;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exppoly::ExpPoly;

pub const DEFAULT_POINTS_PER_AXIS: usize = 20;

/// Sample points with complex values.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleGrid {
    d: usize,
    points: Vec<Vec<f64>>,
    values: Vec<Complex64>,
}

/// Tensor grid over `[lo, hi]^d` with `n` equally spaced points per axis.
pub fn tensor_grid(d: usize, n: usize, lo: f64, hi: f64) -> Vec<Vec<f64>> {
    let axis: Vec<f64> = match n {
        0 => Vec::new(),
        1 => vec![(lo + hi) / 2.0],
        _ => (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect(),
    };
    let mut out = vec![Vec::with_capacity(d)];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |&t| {
                    let mut q = p.clone();
                    q.push(t);
                    q
                })
            })
            .collect();
    }
    out
}

impl SampleGrid {
    pub fn new(d: usize, points: Vec<Vec<f64>>, values: Vec<Complex64>) -> Result<Self> {
        if points.len() != values.len() {
            return Err(Error::InvalidInput(format!(
                "{} points but {} values",
                points.len(),
                values.len()
            )));
        }
        if let Some(p) = points.iter().find(|p| p.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: p.len() });
        }
        if let Some(k) = values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::NonFiniteValue(k));
        }
        Ok(Self { d, points, values })
    }

    /// `values[k] = f(points[k])`.
    pub fn sample(f: &ExpPoly, points: Vec<Vec<f64>>) -> Result<Self> {
        let d = f.dim();
        Self::sample_fn(d, points, |x| f.evaluate(x))
    }

    pub fn sample_fn(d: usize, points: Vec<Vec<f64>>, f: impl Fn(&[f64]) -> Complex64) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: p.len() });
        }
        let values = points.iter().map(|p| f(p)).collect();
        Self::new(d, points, values)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// Reads rows `x_1, …, x_d, re, im`. A first row that does not parse as
/// numbers is treated as a header.
pub fn read_csv<R: Read>(reader: R) -> Result<SampleGrid> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut d = None;
    let mut points = Vec::new();
    let mut values = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::InvalidInput(format!("csv: {e}")))?;
        let nums: std::result::Result<Vec<f64>, _> = rec.iter().map(str::parse::<f64>).collect();
        let nums = match nums {
            Ok(n) => n,
            Err(_) if line == 0 => continue,
            Err(e) => return Err(Error::InvalidInput(format!("csv line {}: {e}", line + 1))),
        };
        if nums.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "csv line {}: need x_1..x_d, re, im",
                line + 1
            )));
        }
        let width = nums.len() - 2;
        match d {
            None => d = Some(width),
            Some(w) if w != width => return Err(Error::DimensionMismatch { expected: w, found: width }),
            _ => {}
        }
        values.push(Complex64::new(nums[width], nums[width + 1]));
        points.push(nums[..width].to_vec());
    }
    let d = d.ok_or_else(|| Error::InvalidInput("csv has no data rows".into()))?;
    SampleGrid::new(d, points, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::GaussRational;

    #[test]
    fn tensor_shape() {
        let g = tensor_grid(2, 3, -1.0, 1.0);
        assert_eq!(g.len(), 9);
        assert_eq!(g[0], vec![-1.0, -1.0]);
        assert_eq!(g[5], vec![0.0, 1.0]);
    }

    #[test]
    fn sampling_examples() {
        let pts = vec![vec![0.0], vec![1.0], vec![2.0]];
        let z = SampleGrid::sample(&ExpPoly::zero(1), pts.clone()).unwrap();
        assert!(z.values().iter().all(|v| *v == Complex64::new(0.0, 0.0)));
        let x = SampleGrid::sample(&ExpPoly::var(1, 0), pts).unwrap();
        assert_eq!(x.values().iter().map(|v| v.re).collect::<Vec<_>>(), vec![0.0, 1.0, 2.0]);
        let e = SampleGrid::sample(&ExpPoly::exp_linear(vec![GaussRational::one()]), vec![vec![1.0]]).unwrap();
        assert!((e.values()[0].re - std::f64::consts::E).abs() < 1e-12);
    }

    #[test]
    fn overflow_is_reported() {
        let f = ExpPoly::exp_linear(vec![GaussRational::from_int(1000)]);
        let err = SampleGrid::sample(&f, vec![vec![0.0], vec![1.0]]).unwrap_err();
        assert_eq!(err, Error::NonFiniteValue(1));
    }

    #[test]
    fn csv_with_header() {
        let text = "x1,x2,re,im\n0,1,2.5,0\n1,1,3,-1\n";
        let g = read_csv(text.as_bytes()).unwrap();
        assert_eq!(g.d(), 2);
        assert_eq!(g.values()[1], Complex64::new(3.0, -1.0));
        assert!(read_csv("1,2\n".as_bytes()).is_err());
        assert!(read_csv("0,1,2\n0,1,2,3\n".as_bytes()).is_err());
    }
}
