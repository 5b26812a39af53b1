//! `start:stop:count` grid specifications.

use std::str::FromStr;

/// `count ≥ 2` equally spaced points from `start` to `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| if i + 1 == self.count { self.stop } else { self.start + step * i as f64 })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<_> = s.split(':').collect();
        let [a, b, n] = parts.as_slice() else {
            return Err(format!("grid {s:?} is not start:stop:count"));
        };
        let num = |x: &str| {
            x.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("grid {s:?}: {x:?} is not a finite number"))
        };
        let count: usize = n.trim().parse().map_err(|_| format!("grid {s:?}: count {n:?} is not an integer"))?;
        if count < 2 {
            return Err(format!("grid {s:?}: count must be at least 2"));
        }
        Ok(Grid {
            start: num(a)?,
            stop: num(b)?,
            count,
        })
    }
}
