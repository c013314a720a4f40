use super::Lattice;
use crate::error::Result;

/// An order isomorphism between two finite posets given by their `≤`
/// predicates, if one exists. Returns `map[i] = image of i`.
pub fn poset_isomorphism(n: usize, le_a: impl Fn(usize, usize) -> bool, m: usize, le_b: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    if n != m {
        return None;
    }
    let profile = |le: &dyn Fn(usize, usize) -> bool, i: usize| {
        let down = (0..n).filter(|&j| le(j, i)).count();
        let up = (0..n).filter(|&j| le(i, j)).count();
        (down, up)
    };
    let pa: Vec<_> = (0..n).map(|i| profile(&le_a, i)).collect();
    let pb: Vec<_> = (0..n).map(|i| profile(&le_b, i)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    // Assign rarest profiles first to prune early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (pa.iter().filter(|p| **p == pa[i]).count(), pa[i]));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn go(
        k: usize,
        order: &[usize],
        pa: &[(usize, usize)],
        pb: &[(usize, usize)],
        le_a: &dyn Fn(usize, usize) -> bool,
        le_b: &dyn Fn(usize, usize) -> bool,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let i = order[k];
        for j in 0..pb.len() {
            if used[j] || pb[j] != pa[i] {
                continue;
            }
            let ok = order[..k].iter().all(|&p| le_a(p, i) == le_b(map[p], j) && le_a(i, p) == le_b(j, map[p]));
            if ok {
                map[i] = j;
                used[j] = true;
                if go(k + 1, order, pa, pb, le_a, le_b, map, used) {
                    return true;
                }
                used[j] = false;
                map[i] = usize::MAX;
            }
        }
        false
    }

    if go(0, &order, &pa, &pb, &le_a, &le_b, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Whether two finite lattices are order-isomorphic.
pub fn order_isomorphic(a: &Lattice, b: &Lattice) -> Result<bool> {
    let ta = a.enumerate_elements()?;
    let tb = b.enumerate_elements()?;
    let sa = |i: usize, j: usize| ta.set(i).is_subset(ta.set(j));
    let sb = |i: usize, j: usize| tb.set(i).is_subset(tb.set(j));
    Ok(poset_isomorphism(ta.len(), sa, tb.len(), sb).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, chain, free_lattice};

    #[test]
    fn basic_isomorphisms() {
        assert!(order_isomorphic(&chain(3), &free_lattice(1)).unwrap());
        assert!(!order_isomorphic(&chain(4), &boolean(2)).unwrap());
        assert!(order_isomorphic(&boolean(2), &boolean(2).opposite()).unwrap());
        assert!(order_isomorphic(&free_lattice(0), &free_lattice(0).opposite()).unwrap());
        assert!(order_isomorphic(&free_lattice(3), &free_lattice(3).opposite()).unwrap());
    }
}
