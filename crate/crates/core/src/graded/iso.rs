use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// Largest carrier [`find_ring_isomorphism`] accepts.
pub const ISOMORPHISM_CAP: u64 = 64;

/// Greedy ring generators: each new generator is the least element outside
/// the subring generated so far.
fn ring_generators(r: &FiniteRing) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut closed = subring(r, &[]);
    while let Some(x) = (0..r.size()).find(|&x| !closed[x as usize]) {
        gens.push(x);
        closed = subring(r, &gens);
    }
    gens
}

fn subring(r: &FiniteRing, gens: &[Elem]) -> Vec<bool> {
    let mut inside = vec![false; r.size() as usize];
    let mut members = vec![r.one()];
    inside[r.one() as usize] = true;
    for &g in gens {
        if !inside[g as usize] {
            inside[g as usize] = true;
            members.push(g);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for j in 0..=i {
            let y = members[j];
            for z in [r.add(x, y), r.mul(x, y), r.mul(y, x)] {
                if !inside[z as usize] {
                    inside[z as usize] = true;
                    members.push(z);
                }
            }
        }
        i += 1;
    }
    inside
}

/// Extends a partial map through sums and products of mapped pairs;
/// `false` on a conflict or a collision.
fn close(a: &FiniteRing, b: &FiniteRing, map: &mut [Option<Elem>], used: &mut [bool]) -> bool {
    let mut known: Vec<Elem> = (0..a.size())
        .filter(|&x| map[x as usize].is_some())
        .collect();
    let mut i = 0;
    while i < known.len() {
        let x = known[i];
        for j in 0..=i {
            let y = known[j];
            let (fx, fy) = (map[x as usize].unwrap(), map[y as usize].unwrap());
            for (z, fz) in [
                (a.add(x, y), b.add(fx, fy)),
                (a.mul(x, y), b.mul(fx, fy)),
                (a.mul(y, x), b.mul(fy, fx)),
            ] {
                match map[z as usize] {
                    Some(w) if w != fz => return false,
                    Some(_) => {}
                    None => {
                        if used[fz as usize] {
                            return false;
                        }
                        map[z as usize] = Some(fz);
                        used[fz as usize] = true;
                        known.push(z);
                    }
                }
            }
        }
        i += 1;
    }
    true
}

/// Searches for a ring isomorphism `a → b`, returned as the image table.
pub fn find_ring_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Result<Option<Vec<Elem>>> {
    for r in [a, b] {
        if r.size() > ISOMORPHISM_CAP {
            return Err(Error::CapExceeded {
                size: r.size(),
                cap: ISOMORPHISM_CAP,
            });
        }
    }
    if a.size() != b.size() || a.characteristic() != b.characteristic() {
        return Ok(None);
    }
    let gens = ring_generators(a);
    let mut map = vec![None; a.size() as usize];
    let mut used = vec![false; b.size() as usize];
    map[a.one() as usize] = Some(b.one());
    used[b.one() as usize] = true;
    if !close(a, b, &mut map, &mut used) {
        return Ok(None);
    }
    Ok(search(a, b, &gens, map, used).map(|m| m.into_iter().map(Option::unwrap).collect()))
}

fn search(
    a: &FiniteRing,
    b: &FiniteRing,
    gens: &[Elem],
    map: Vec<Option<Elem>>,
    used: Vec<bool>,
) -> Option<Vec<Option<Elem>>> {
    let Some((&g, rest)) = gens.split_first() else {
        return map.iter().all(Option::is_some).then_some(map);
    };
    if map[g as usize].is_some() {
        return search(a, b, rest, map, used);
    }
    let order = a.additive_order(g);
    let behaviour = a.power_behaviour(g);
    for y in b.elements() {
        if used[y as usize] || b.additive_order(y) != order || b.power_behaviour(y) != behaviour {
            continue;
        }
        let (mut m, mut u) = (map.clone(), used.clone());
        m[g as usize] = Some(y);
        u[y as usize] = true;
        if close(a, b, &mut m, &mut u) {
            if let Some(done) = search(a, b, rest, m, u) {
                return Some(done);
            }
        }
    }
    None
}
