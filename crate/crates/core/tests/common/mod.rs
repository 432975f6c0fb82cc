//! Deliberately naive group code, independent of the library, used as an oracle.
#![allow(dead_code)]

pub mod props;

use std::collections::BTreeSet;

/// A permutation of 0..n as its image list.
pub type P = Vec<u8>;

/// `(a * b)(x) = a(b(x))`.
pub fn mul(a: &P, b: &P) -> P {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn id(n: usize) -> P {
    (0..n as u8).collect()
}

pub fn closure(n: usize, gens: &[P]) -> BTreeSet<P> {
    let mut set: BTreeSet<P> = BTreeSet::new();
    set.insert(id(n));
    let mut frontier = vec![id(n)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = mul(g, &x);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn order(p: &P) -> usize {
    let n = p.len();
    let mut x = p.clone();
    let mut k = 1;
    while x != id(n) {
        x = mul(p, &x);
        k += 1;
    }
    k
}

/// Every subgroup of the group with the given elements, by joining until nothing new appears.
pub fn subgroups(elements: &BTreeSet<P>) -> BTreeSet<BTreeSet<P>> {
    let n = elements.iter().next().unwrap().len();
    let mut all: BTreeSet<BTreeSet<P>> = elements
        .iter()
        .map(|g| closure(n, std::slice::from_ref(g)))
        .collect();
    let mut layer: Vec<BTreeSet<P>> = all.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for h in &layer {
            let gens: Vec<P> = h.iter().cloned().collect();
            for g in elements {
                if h.contains(g) {
                    continue;
                }
                let mut more = gens.clone();
                more.push(g.clone());
                let j = closure(n, &more);
                if all.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        layer = next;
    }
    all
}

/// Converts a 1-based image list to the naive representation.
pub fn from_images(images: &[usize]) -> P {
    images.iter().map(|&x| (x - 1) as u8).collect()
}

/// Automorphisms of a simple graph on 0..n by trying every permutation.
pub fn naive_automorphisms(n: usize, edges: &[(usize, usize)]) -> BTreeSet<P> {
    let mut adj = vec![vec![0usize; n]; n];
    for &(a, b) in edges {
        adj[a][b] += 1;
        adj[b][a] += 1;
    }
    let mut out = BTreeSet::new();
    let mut p: Vec<usize> = (0..n).collect();
    permute(&mut p, 0, &mut |p| {
        if (0..n).all(|a| (0..n).all(|b| adj[a][b] == adj[p[a]][p[b]])) {
            out.insert(p.iter().map(|&x| x as u8).collect());
        }
    });
    out
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}
