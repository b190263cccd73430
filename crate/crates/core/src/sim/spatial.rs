//! Uniform spatial hash over piece centers.

use std::collections::HashMap;

use crate::geometry::Point2;

#[derive(Clone, Debug)]
pub struct SpatialHash {
    cell: f64,
    buckets: HashMap<(i64, i64), Vec<usize>>,
}

impl SpatialHash {
    pub fn new(cell_size: f64) -> Self {
        assert!(cell_size > 0.0, "cell size must be positive");
        Self {
            cell: cell_size,
            buckets: HashMap::new(),
        }
    }

    fn key(&self, p: Point2) -> (i64, i64) {
        (
            (p.x / self.cell).floor() as i64,
            (p.y / self.cell).floor() as i64,
        )
    }

    pub fn insert(&mut self, p: Point2, id: usize) {
        self.buckets.entry(self.key(p)).or_default().push(id);
    }

    /// Removes `id` from the bucket holding `p`. Returns false if absent.
    pub fn remove(&mut self, p: Point2, id: usize) -> bool {
        let key = self.key(p);
        match self.buckets.get_mut(&key) {
            Some(bucket) => match bucket.iter().position(|&x| x == id) {
                Some(i) => {
                    bucket.swap_remove(i);
                    if bucket.is_empty() {
                        self.buckets.remove(&key);
                    }
                    true
                }
                None => false,
            },
            None => false,
        }
    }

    /// Calls `f` for every id stored in a cell that intersects the square
    /// `[p - radius, p + radius]`. Ids may lie farther than `radius` away.
    pub fn for_each_near(&self, p: Point2, radius: f64, mut f: impl FnMut(usize)) {
        let (x0, y0) = self.key(Point2::new(p.x - radius, p.y - radius));
        let (x1, y1) = self.key(Point2::new(p.x + radius, p.y + radius));
        for cy in y0..=y1 {
            for cx in x0..=x1 {
                if let Some(bucket) = self.buckets.get(&(cx, cy)) {
                    bucket.iter().copied().for_each(&mut f);
                }
            }
        }
    }

    /// Short-circuiting variant of [`SpatialHash::for_each_near`].
    pub fn any_near(&self, p: Point2, radius: f64, mut pred: impl FnMut(usize) -> bool) -> bool {
        let (x0, y0) = self.key(Point2::new(p.x - radius, p.y - radius));
        let (x1, y1) = self.key(Point2::new(p.x + radius, p.y + radius));
        for cy in y0..=y1 {
            for cx in x0..=x1 {
                if let Some(bucket) = self.buckets.get(&(cx, cy)) {
                    if bucket.iter().any(|&id| pred(id)) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn finds_everything_within_radius() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pts: Vec<Point2> = (0..500)
            .map(|_| Point2::new(rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0)))
            .collect();
        let mut grid = SpatialHash::new(1.3);
        for (i, p) in pts.iter().enumerate() {
            grid.insert(*p, i);
        }
        for _ in 0..100 {
            let q = Point2::new(rng.random_range(-11.0..11.0), rng.random_range(-11.0..11.0));
            let mut found = Vec::new();
            grid.for_each_near(q, 1.3, |i| found.push(i));
            for (i, p) in pts.iter().enumerate() {
                if (*p - q).norm() <= 1.3 {
                    assert!(found.contains(&i));
                }
            }
        }
    }

    #[test]
    fn remove_and_reinsert() {
        let mut grid = SpatialHash::new(1.0);
        let p = Point2::new(-0.5, 2.5);
        grid.insert(p, 7);
        assert!(grid.any_near(p, 0.1, |i| i == 7));
        assert!(grid.remove(p, 7));
        assert!(!grid.remove(p, 7));
        assert!(!grid.any_near(p, 0.1, |_| true));
    }
}
