//! Regenerates the fullerene fixtures in `corpus/`.
//!
//! Every placement of the 12 pentagons in a face spiral of `n/2 + 2` faces
//! is wound up into a dual triangulation. Successful windups are turned into
//! fullerene maps, validated, and deduplicated by canonical code (mirror
//! images identified). Isomers are written in order of their
//! lexicographically first pentagon placement.
//!
//! Usage: `cargo run --release -p leapfrog-cli --example spiral_corpus -- <out-dir> [n...]`

use std::collections::{BTreeSet, VecDeque};
use std::path::PathBuf;

use leapfrog_core::fullerene::validate_fullerene;
use leapfrog_core::planar_code::write_planar_code;
use leapfrog_core::planar_map::{PlanarMap, VertexId};

/// Winds a face spiral into the adjacency lists of the dual triangulation.
fn windup(sizes: &[usize]) -> Option<Vec<Vec<usize>>> {
    let f = sizes.len();
    let mut adj = vec![Vec::new(); f];
    let mut free: Vec<isize> = sizes.iter().map(|&s| s as isize).collect();
    let connect = |adj: &mut Vec<Vec<usize>>, free: &mut Vec<isize>, a: usize, b: usize| -> bool {
        if a == b || adj[a].contains(&b) {
            return false;
        }
        adj[a].push(b);
        adj[b].push(a);
        free[a] -= 1;
        free[b] -= 1;
        free[a] >= 0 && free[b] >= 0
    };
    let mut open: VecDeque<usize> = VecDeque::new();
    open.push_back(0);
    if !connect(&mut adj, &mut free, 1, 0) {
        return None;
    }
    open.push_back(1);
    for k in 2..f {
        let back = *open.back()?;
        if !connect(&mut adj, &mut free, k, back) {
            return None;
        }
        let front = *open.front()?;
        if front != back && !connect(&mut adj, &mut free, k, front) {
            return None;
        }
        // close saturated faces at the oldest end of the boundary
        while open.len() > 1 && free[*open.front()?] == 0 {
            open.pop_front();
            let nf = *open.front()?;
            if free[k] == 0 && k == f - 1 {
                break;
            }
            if !adj[k].contains(&nf) && !connect(&mut adj, &mut free, k, nf) {
                return None;
            }
        }
        // and at the newest end
        while open.len() > 1 && free[*open.back()?] == 0 {
            open.pop_back();
            let nb = *open.back()?;
            if free[k] == 0 && k == f - 1 {
                break;
            }
            if !adj[k].contains(&nb) && !connect(&mut adj, &mut free, k, nb) {
                return None;
            }
        }
        if k < f - 1 {
            if free[k] == 0 {
                return None;
            }
            open.push_back(k);
        }
    }
    if free.iter().any(|&x| x != 0) {
        return None;
    }
    Some(adj)
}

/// Orders each neighborhood of a triangulation into a consistent rotation.
fn embed_triangulation(adj: &[Vec<usize>]) -> Option<Vec<Vec<VertexId>>> {
    let n = adj.len();
    // link cycle of every vertex (unoriented)
    let mut links: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let nb = &adj[v];
        let mut cycle = vec![nb[0]];
        let mut prev = usize::MAX;
        loop {
            let cur = *cycle.last().unwrap();
            let cands: Vec<usize> = nb
                .iter()
                .copied()
                .filter(|&w| w != cur && adj[cur].contains(&w))
                .collect();
            if cands.len() != 2 {
                return None;
            }
            let nxt = if cands[0] != prev { cands[0] } else { cands[1] };
            if nxt == cycle[0] {
                break;
            }
            prev = cur;
            cycle.push(nxt);
            if cycle.len() > nb.len() {
                return None;
            }
        }
        if cycle.len() != nb.len() {
            return None;
        }
        links.push(cycle);
    }
    let mut rot: Vec<Option<Vec<usize>>> = vec![None; n];
    rot[0] = Some(links[0].clone());
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let ru = rot[u].clone().unwrap();
        let deg = ru.len();
        for i in 0..deg {
            let v = ru[i];
            let w = ru[(i + 1) % deg];
            // around v, u must follow w
            let mut lv = links[v].clone();
            let pos_w = lv.iter().position(|&x| x == w)?;
            if lv[(pos_w + 1) % lv.len()] != u {
                lv.reverse();
            }
            let pos_w = lv.iter().position(|&x| x == w)?;
            if lv[(pos_w + 1) % lv.len()] != u {
                return None;
            }
            match &rot[v] {
                Some(existing) => {
                    let pe = existing.iter().position(|&x| x == w)?;
                    if existing[(pe + 1) % existing.len()] != u {
                        return None;
                    }
                }
                None => {
                    rot[v] = Some(lv);
                    queue.push_back(v);
                }
            }
        }
    }
    rot.into_iter()
        .map(|r| r.map(|r| r.into_iter().map(VertexId::new).collect()))
        .collect()
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn isomers(n: usize) -> Vec<PlanarMap> {
    let faces = n / 2 + 2;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    combinations(faces, 12, |pent| {
        let mut sizes = vec![6usize; faces];
        for &p in pent {
            sizes[p] = 5;
        }
        let Some(adj) = windup(&sizes) else { return };
        let Some(rot) = embed_triangulation(&adj) else { return };
        let Ok(tri) = PlanarMap::from_rotations(&rot) else { return };
        let map = tri.dual().map;
        let Ok(g) = validate_fullerene(map) else { return };
        if g.n() != n {
            return;
        }
        let code = g.map().canonical_code(true);
        if seen.insert(code) {
            out.push(g.into_map());
        }
    });
    out
}

fn main() {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().expect("usage: spiral_corpus <out-dir> [n...]"));
    let mut sizes: Vec<usize> = args.map(|a| a.parse().expect("vertex count")).collect();
    if sizes.is_empty() {
        sizes = vec![20, 24, 26, 28, 30, 32, 34, 36, 38];
    }
    std::fs::create_dir_all(&dir).expect("create output directory");
    for n in sizes {
        let maps = isomers(n);
        println!("C{n}: {} isomers", maps.len());
        let path = dir.join(format!("c{n}.pc"));
        std::fs::write(&path, write_planar_code(&maps)).expect("write fixture");
    }
}
