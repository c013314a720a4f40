use super::{Lattice, Relation};

fn letters(n: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if n <= SHORT.len() {
        SHORT[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// Free bounded distributive lattice on `n` generators (`x, y, z, w`, or `x1..xn` beyond four).
pub fn free_lattice(n: usize) -> Lattice {
    Lattice::present(letters(n), Vec::new()).expect("free presentation is valid")
}

/// The one-element lattice `0 = 1`.
pub fn trivial() -> Lattice {
    Lattice::present(Vec::new(), vec![Relation::new([], [])]).expect("valid")
}

/// Chain with `n ≥ 1` elements. `chain(3)` is `0 < m < 1`; longer chains use
/// generators `g1 ≤ g2 ≤ …`.
pub fn chain(n: usize) -> Lattice {
    match n {
        0 | 1 => trivial(),
        2 => free_lattice(0),
        3 => Lattice::present(vec!["m".into()], Vec::new()).expect("valid"),
        _ => {
            let k = n - 2;
            let labels = (1..=k).map(|i| format!("g{i}")).collect();
            let rels = (0..k - 1).map(|i| Relation::new([i], [i + 1])).collect();
            Lattice::present(labels, rels).expect("valid")
        }
    }
}

/// Boolean algebra with `k` atoms (`2^k` elements). With two atoms they are `a` and `b`.
pub fn boolean(k: usize) -> Lattice {
    let labels: Vec<String> = match k {
        2 => vec!["a".into(), "b".into()],
        _ => (1..=k).map(|i| format!("a{i}")).collect(),
    };
    let mut rels = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            rels.push(Relation::new([i, j], []));
        }
    }
    rels.push(Relation::new([], 0..k));
    Lattice::present(labels, rels).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(trivial().enumerate_elements().unwrap().len(), 1);
        for n in 1..=7 {
            assert_eq!(chain(n).enumerate_elements().unwrap().len(), n);
        }
        for k in 0..=4 {
            assert_eq!(boolean(k).enumerate_elements().unwrap().len(), 1 << k);
        }
    }

    #[test]
    fn chain_presentation_has_five_elements() {
        let c = chain(5);
        assert_eq!(c.num_generators(), 3);
        assert_eq!(c.relations().len(), 2);
        assert_eq!(c.enumerate_elements().unwrap().len(), 5);
    }
}
