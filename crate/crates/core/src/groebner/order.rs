use std::cmp::Ordering;

/// Monomial orders understood by the engine.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub enum TermOrder {
    /// Graded reverse lexicographic with `v0 > v1 > ...`.
    #[default]
    DegRevLex,
    /// Graded lexicographic with `v0 > v1 > ...`.
    DegLex,
    /// Product order: the listed variables form the front block and are
    /// compared first (degrevlex among themselves), then the remaining
    /// variables by degrevlex.
    Block(Vec<usize>),
}

impl TermOrder {
    pub fn block(front: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = front.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        TermOrder::Block(v)
    }

    /// Whether the order refines total degree.
    pub fn is_graded(&self) -> bool {
        !matches!(self, TermOrder::Block(_))
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::DegRevLex => degrevlex(a, b, |_| true),
            TermOrder::DegLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            TermOrder::Block(front) => {
                let in_front = |i: usize| front.binary_search(&i).is_ok();
                degrevlex(a, b, in_front).then_with(|| degrevlex(a, b, |i| !in_front(i)))
            }
        }
    }
}

/// Degrevlex restricted to the variables selected by `keep`.
fn degrevlex(a: &[u32], b: &[u32], keep: impl Fn(usize) -> bool) -> Ordering {
    let mut da = 0u32;
    let mut db = 0u32;
    let mut last = Ordering::Equal;
    for i in 0..a.len() {
        if !keep(i) {
            continue;
        }
        da += a[i];
        db += b[i];
        if a[i] != b[i] {
            // the last differing variable decides, smaller exponent wins
            last = b[i].cmp(&a[i]);
        }
    }
    da.cmp(&db).then(last)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_basics() {
        let o = TermOrder::DegRevLex;
        // x0*x2 < x1^2 in degrevlex, x0*x2 > x1^2 in deglex
        assert_eq!(o.compare(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(
            TermOrder::DegLex.compare(&[1, 0, 1], &[0, 2, 0]),
            Ordering::Greater
        );
        assert_eq!(o.compare(&[1, 0, 0], &[0, 1, 0]), Ordering::Greater);
        assert_eq!(o.compare(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_front() {
        let o = TermOrder::block([0]);
        // t beats any power of the other variables
        assert_eq!(o.compare(&[1, 0, 0], &[0, 5, 5]), Ordering::Greater);
        assert_eq!(o.compare(&[1, 2, 0], &[1, 0, 1]), Ordering::Greater);
    }
}
