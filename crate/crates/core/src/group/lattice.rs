use std::collections::{HashMap, VecDeque};

use super::{FiniteGroup, Subgroup};
use crate::elements::ElementSet;
use crate::error::{Error, Result};

pub const DEFAULT_SUBGROUP_LIMIT: usize = 20_000;

/// All subgroups of a group, plus a join table `⟨H, g⟩` for every subgroup
/// `H` and element `g`.
///
/// Built bottom-up by cyclic extension: start from the trivial subgroup and
/// close each known subgroup with one extra element. Every subgroup is reached
/// because it is the top of a chain `⟨g1⟩ ≤ ⟨g1,g2⟩ ≤ ...`. The join table is a
/// by-product of that construction, and it turns most closure computations
/// elsewhere in the crate into table lookups.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    order: usize,
    subgroups: Vec<Subgroup>,
    join: Vec<u32>,
    frattini_join: Vec<u32>,
    frattini: usize,
    index: HashMap<ElementSet, usize>,
}

impl SubgroupLattice {
    pub fn build(group: &FiniteGroup, limit: usize) -> Result<Self> {
        let n = group.order();
        let mut sets: Vec<ElementSet> = vec![ElementSet::from_elements(n, [0])];
        let mut gens: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index: HashMap<ElementSet, usize> = HashMap::from([(sets[0].clone(), 0)]);
        let mut join: Vec<u32> = Vec::new();
        let mut queue = VecDeque::from([0usize]);

        while let Some(h) = queue.pop_front() {
            let mut row = vec![0u32; n];
            for (g, slot) in row.iter_mut().enumerate() {
                if sets[h].contains(g) {
                    *slot = h as u32;
                    continue;
                }
                let mut new_gens = gens[h].clone();
                new_gens.push(g);
                let set = group.closure_set(&new_gens);
                let id = match index.get(&set) {
                    Some(&id) => id,
                    None => {
                        let id = sets.len();
                        if id >= limit {
                            return Err(Error::budget("subgroup lattice size", limit as u64));
                        }
                        index.insert(set.clone(), id);
                        sets.push(set);
                        gens.push(new_gens);
                        queue.push_back(id);
                        id
                    }
                };
                *slot = id as u32;
            }
            // rows are filled in discovery order, and the queue is FIFO
            debug_assert_eq!(join.len(), h * n);
            join.extend(row);
        }

        // canonical order: by cardinality, then lexicographic element lists
        let mut order_ids: Vec<usize> = (0..sets.len()).collect();
        order_ids.sort_by(|&a, &b| sets[a].len().cmp(&sets[b].len()).then_with(|| sets[a].cmp(&sets[b])));
        let mut new_id = vec![0usize; sets.len()];
        for (new, &old) in order_ids.iter().enumerate() {
            new_id[old] = new;
        }
        let mut canonical_join = vec![0u32; join.len()];
        for (new, &old) in order_ids.iter().enumerate() {
            for g in 0..n {
                canonical_join[new * n + g] = new_id[join[old * n + g] as usize] as u32;
            }
        }
        let whole = sets.len() - 1;

        let mut subgroups: Vec<Subgroup> = order_ids
            .iter()
            .map(|&old| Subgroup {
                elements: sets[old].clone(),
                generators: gens[old].clone(),
                is_normal: false,
                is_maximal: false,
            })
            .collect();
        for (id, s) in subgroups.iter_mut().enumerate() {
            s.is_normal = s
                .generators
                .iter()
                .all(|&x| (0..n).all(|g| s.elements.contains(group.conjugate(x, g))));
            s.is_maximal = id != whole
                && (0..n)
                    .filter(|&g| !s.elements.contains(g))
                    .all(|g| canonical_join[id * n + g] as usize == whole);
        }
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elements.clone(), i))
            .collect::<HashMap<_, _>>();

        let mut frat_set = ElementSet::full(n);
        for s in subgroups.iter().filter(|s| s.is_maximal) {
            frat_set.intersect_with(&s.elements);
        }
        let frattini = index[&frat_set];
        let frat_gens = subgroups[frattini].generators.clone();
        let frattini_join = (0..subgroups.len())
            .map(|h| frat_gens.iter().fold(h, |acc, &g| canonical_join[acc * n + g] as usize) as u32)
            .collect();

        Ok(SubgroupLattice {
            order: n,
            subgroups,
            join: canonical_join,
            frattini_join,
            frattini,
            index,
        })
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, id: usize) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Id of `⟨H, g⟩`.
    #[inline]
    pub fn join(&self, h: usize, g: usize) -> usize {
        self.join[h * self.order + g] as usize
    }

    /// Id of `⟨H, Frat(G)⟩`.
    #[inline]
    pub fn join_frattini(&self, h: usize) -> usize {
        self.frattini_join[h] as usize
    }

    #[inline]
    pub fn contains(&self, h: usize, g: usize) -> bool {
        self.subgroups[h].elements.contains(g)
    }

    pub fn id_of(&self, set: &ElementSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// Id of the subgroup generated by `xs`.
    pub fn generated(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.trivial(), |h, &x| self.join(h, x))
    }

    pub fn frattini_id(&self) -> usize {
        self.frattini
    }

    pub fn frattini(&self) -> &Subgroup {
        &self.subgroups[self.frattini]
    }

    pub fn maximal(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups.iter().filter(|s| s.is_maximal)
    }

    pub fn normal(&self) -> impl Iterator<Item = (usize, &Subgroup)> {
        self.subgroups.iter().enumerate().filter(|(_, s)| s.is_normal)
    }

    /// Least number of extra elements needed to generate the whole group
    /// together with subgroup `h`, by breadth-first search over joins.
    pub fn relative_rank_from(&self, h: usize) -> usize {
        let whole = self.whole();
        let mut seen = vec![false; self.len()];
        let mut frontier = vec![h];
        seen[h] = true;
        let mut r = 0;
        loop {
            if frontier.contains(&whole) {
                return r;
            }
            let mut next = Vec::new();
            for &x in &frontier {
                for g in 0..self.order {
                    let y = self.join(x, g);
                    if !seen[y] {
                        seen[y] = true;
                        next.push(y);
                    }
                }
            }
            frontier = next;
            r += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_named_group;

    fn lattice(recipe: &str) -> (FiniteGroup, SubgroupLattice) {
        let g = make_named_group(recipe).unwrap();
        let l = SubgroupLattice::build(&g, DEFAULT_SUBGROUP_LIMIT).unwrap();
        (g, l)
    }

    /// Every subgroup of a group this small is generated by at most 3 elements,
    /// so closing all subsets of size <= 3 finds them all.
    fn brute_force_subgroups(g: &FiniteGroup) -> Vec<ElementSet> {
        let n = g.order();
        let mut found = std::collections::BTreeSet::new();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    found.insert(g.closure_set(&[a, b, c]));
                }
            }
        }
        found.into_iter().collect()
    }

    #[test]
    fn cyclic_six_has_four_subgroups() {
        let (_, l) = lattice("cyclic(6)");
        let orders: Vec<usize> = l.subgroups().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn s4_lattice_matches_brute_force() {
        let (g, l) = lattice("symmetric(4)");
        assert_eq!(l.len(), 30);
        assert_eq!(brute_force_subgroups(&g).len(), 30);
        for s in l.subgroups() {
            assert_eq!(24 % s.order(), 0);
        }
        assert_eq!(l.subgroups().iter().filter(|s| s.is_normal).count(), 4);
    }

    #[test]
    fn q8_subgroups_all_normal() {
        let (g, l) = lattice("quaternion8");
        assert_eq!(l.len(), 6);
        assert_eq!(brute_force_subgroups(&g).len(), 6);
        assert!(l.subgroups().iter().all(|s| s.is_normal));
    }

    #[test]
    fn frattini_examples() {
        assert_eq!(lattice("symmetric(4)").1.frattini().order(), 1);
        assert_eq!(lattice("cyclic(4)").1.frattini().order(), 2);
        let (q8, l) = lattice("quaternion8");
        let frat = l.frattini();
        assert_eq!(frat.order(), 2);
        // the centre {1, a^2}
        assert!(frat.contains(q8.find_label("a^2").unwrap()));
        assert_eq!(lattice("cyclic(1)").1.frattini().order(), 1);
    }

    #[test]
    fn join_table_agrees_with_closure() {
        let (g, l) = lattice("dihedral(6)");
        for (h, s) in l.subgroups().iter().enumerate() {
            for x in 0..g.order() {
                let mut gens = s.generators.clone();
                gens.push(x);
                assert_eq!(l.get(l.join(h, x)).elements, g.closure_set(&gens));
            }
        }
    }

    #[test]
    fn relative_ranks() {
        let (g, l) = lattice("symmetric(4)");
        assert_eq!(l.relative_rank_from(l.trivial()), 2);
        let t = g.find_label("(1,2)").unwrap();
        assert_eq!(l.relative_rank_from(l.generated(&[t])), 1);
        assert_eq!(l.relative_rank_from(l.whole()), 0);
    }

    #[test]
    fn limit_is_enforced() {
        let g = make_named_group("symmetric(4)").unwrap();
        assert!(SubgroupLattice::build(&g, 10).unwrap_err().is_budget());
    }
}
