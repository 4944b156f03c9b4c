//! Extended Coxeter diagrams of the irreducible affine Weyl groups, finite
//! type recognition of their proper sub-diagrams, and the closed formula for
//! the multivariate affine Eulerian polynomial in terms of subgroup orders.
//!
//! Node 0 is always the affine node (the lowest root). Nodes `1..=n` carry
//! the simple roots in the same numbering as [`crate::groups`].

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::flag::{FlagPolynomial, Subset};

/// Coxeter bond label `m(i, j)`; `Order(2)` means the nodes are not joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bond {
    Order(u32),
    Infinite,
}

impl Bond {
    fn joined(self) -> bool {
        self != Bond::Order(2)
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Order(m) => write!(f, "{m}"),
            Bond::Infinite => f.write_str("inf"),
        }
    }
}

/// Symmetric bond matrix on nodes `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    bonds: Vec<Vec<Bond>>,
}

impl CoxeterDiagram {
    /// A diagram on `nodes` nodes with the listed non-trivial bonds.
    pub fn from_edges(nodes: usize, edges: &[(usize, usize, Bond)]) -> Result<Self> {
        let mut bonds = vec![vec![Bond::Order(2); nodes]; nodes];
        for &(i, j, m) in edges {
            if i == j || i >= nodes || j >= nodes {
                return Err(Error::Input(format!("bad edge ({i}, {j})")));
            }
            if let Bond::Order(k) = m {
                if k < 2 {
                    return Err(Error::Input(format!("bond label {k} below 2")));
                }
            }
            bonds[i][j] = m;
            bonds[j][i] = m;
        }
        Ok(Self { bonds })
    }

    pub fn node_count(&self) -> usize {
        self.bonds.len()
    }

    /// Highest node index (the rank of the finite group).
    pub fn rank(&self) -> usize {
        self.node_count() - 1
    }

    pub fn bond(&self, i: usize, j: usize) -> Bond {
        if i == j {
            Bond::Order(1)
        } else {
            self.bonds[i][j]
        }
    }

    /// Non-trivial bonds `(i, j, m)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize, Bond)> {
        let n = self.node_count();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.bonds[i][j].joined())
            .map(|(i, j)| (i, j, self.bonds[i][j]))
            .collect()
    }

    fn all_nodes(&self) -> Subset {
        Subset::full(self.rank())
    }

    /// Connected components of the induced sub-diagram on `nodes`.
    fn components(&self, nodes: Subset) -> Vec<Vec<usize>> {
        let mut seen = Subset::EMPTY;
        let mut out = Vec::new();
        for start in nodes.iter() {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in nodes.iter() {
                    if !seen.contains(w) && self.bonds[v][w].joined() {
                        seen.insert(w);
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Finite irreducible Coxeter type. `BC` covers both `B_k` and `C_k`,
/// which share a Coxeter graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrreducibleType {
    A(usize),
    BC(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
    H3,
    H4,
    I2(u32),
}

impl IrreducibleType {
    pub fn rank(self) -> usize {
        match self {
            IrreducibleType::A(k) | IrreducibleType::BC(k) | IrreducibleType::D(k) => k,
            IrreducibleType::E6 => 6,
            IrreducibleType::E7 => 7,
            IrreducibleType::E8 => 8,
            IrreducibleType::F4 | IrreducibleType::H4 => 4,
            IrreducibleType::H3 => 3,
            IrreducibleType::G2 | IrreducibleType::I2(_) => 2,
        }
    }

    /// Group order.
    pub fn order(self) -> BigInt {
        let fact = |k: usize| -> BigInt { (1..=k).map(BigInt::from).product() };
        match self {
            IrreducibleType::A(k) => fact(k + 1),
            IrreducibleType::BC(k) => fact(k) << k,
            IrreducibleType::D(k) => fact(k) << (k - 1),
            IrreducibleType::E6 => BigInt::from(51_840u64),
            IrreducibleType::E7 => BigInt::from(2_903_040u64),
            IrreducibleType::E8 => BigInt::from(696_729_600u64),
            IrreducibleType::F4 => BigInt::from(1152u64),
            IrreducibleType::G2 => BigInt::from(12u64),
            IrreducibleType::H3 => BigInt::from(120u64),
            IrreducibleType::H4 => BigInt::from(14_400u64),
            IrreducibleType::I2(m) => BigInt::from(2 * m),
        }
    }
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleType::A(k) => write!(f, "A{k}"),
            IrreducibleType::BC(k) => write!(f, "B{k}"),
            IrreducibleType::D(k) => write!(f, "D{k}"),
            IrreducibleType::I2(m) => write!(f, "I2({m})"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// Integer coordinates of the roots at nodes `0..=n` (node 0 is the lowest root).
pub fn classical_roots(family: Family, n: usize) -> Result<Vec<Vec<i64>>> {
    check_rank(family, n)?;
    let dim = if family == Family::A { n + 1 } else { n };
    let e = |i: usize, c: i64| {
        let mut v = vec![0i64; dim];
        v[i - 1] += c;
        v
    };
    let add = |a: Vec<i64>, b: Vec<i64>| a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let mut roots = Vec::with_capacity(n + 1);
    match family {
        Family::A => {
            roots.push(add(e(1, 1), e(dim, -1)));
            for i in 1..=n {
                roots.push(add(e(i + 1, 1), e(i, -1)));
            }
        }
        Family::B | Family::C | Family::D => {
            roots.push(match family {
                Family::C => e(n, -2),
                _ => add(e(n - 1, -1), e(n, -1)),
            });
            roots.push(match family {
                Family::B => e(1, 1),
                Family::C => e(1, 2),
                _ => add(e(2, 1), e(1, 1)),
            });
            for i in 2..=n {
                roots.push(add(e(i, 1), e(i - 1, -1)));
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "{family} has no classical root coordinates"
            )))
        }
    }
    Ok(roots)
}

/// Bond label from the angle between two roots, which must be obtuse or
/// antiparallel: `cos^2 = 0, 1/4, 1/2, 3/4, 1` give `m = 2, 3, 4, 6, inf`.
pub fn bond_from_roots(a: &[i64], b: &[i64]) -> Result<Bond> {
    let dot = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(p, q)| p * q).sum::<i64>();
    let ip = dot(a, b);
    if ip > 0 {
        return Err(Error::Classification(format!(
            "roots {a:?} and {b:?} form an acute angle"
        )));
    }
    let q = dot(a, a) * dot(b, b);
    let s = ip * ip;
    Ok(if s == 0 {
        Bond::Order(2)
    } else if 4 * s == q {
        Bond::Order(3)
    } else if 2 * s == q {
        Bond::Order(4)
    } else if 4 * s == 3 * q {
        Bond::Order(6)
    } else if s == q {
        Bond::Infinite
    } else {
        return Err(Error::Classification(format!(
            "roots {a:?} and {b:?} meet at a non-crystallographic angle"
        )));
    })
}

fn check_rank(family: Family, n: usize) -> Result<()> {
    let ok = match family {
        Family::A | Family::C => n >= 1,
        Family::B => n >= 2,
        Family::D => n >= 3,
        _ => family.fixed_rank() == Some(n),
    };
    if ok && n <= crate::flag::MAX_COLOR {
        Ok(())
    } else {
        Err(Error::Domain(format!("no affine diagram for {family}{n}")))
    }
}

/// Extended diagram of the affine Weyl group of type `family` and rank `n`.
///
/// Classical diagrams come from the pairwise angles of the simple roots and
/// the lowest root; exceptional ones are tabulated (Bourbaki numbering).
pub fn extended_diagram(family: Family, n: usize) -> Result<CoxeterDiagram> {
    check_rank(family, n)?;
    if family.is_classical() {
        let roots = classical_roots(family, n)?;
        let mut edges = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                let m = bond_from_roots(&roots[i], &roots[j])?;
                if m.joined() {
                    edges.push((i, j, m));
                }
            }
        }
        return CoxeterDiagram::from_edges(n + 1, &edges);
    }
    let three = Bond::Order(3);
    let e_chain = |tail: &[(usize, usize)]| {
        let mut v: Vec<(usize, usize, Bond)> = vec![(1, 3, three), (3, 4, three), (2, 4, three)];
        v.extend(tail.iter().map(|&(i, j)| (i, j, three)));
        v
    };
    let edges = match family {
        Family::E6 => e_chain(&[(4, 5), (5, 6), (0, 2)]),
        Family::E7 => e_chain(&[(4, 5), (5, 6), (6, 7), (0, 1)]),
        Family::E8 => e_chain(&[(4, 5), (5, 6), (6, 7), (7, 8), (0, 8)]),
        Family::F4 => vec![
            (0, 1, three),
            (1, 2, three),
            (2, 3, Bond::Order(4)),
            (3, 4, three),
        ],
        Family::G2 => vec![(0, 2, three), (1, 2, Bond::Order(6))],
        _ => unreachable!(),
    };
    CoxeterDiagram::from_edges(n + 1, &edges)
}

/// Recognize a connected finite Coxeter graph.
fn recognize(d: &CoxeterDiagram, comp: &[usize]) -> Result<IrreducibleType> {
    let k = comp.len();
    let fail = |why: &str| {
        Err(Error::Classification(format!(
            "component {comp:?} is not of finite type: {why}"
        )))
    };
    if k == 1 {
        return Ok(IrreducibleType::A(1));
    }
    let mut edges = Vec::new();
    for (a, &i) in comp.iter().enumerate() {
        for &j in &comp[a + 1..] {
            match d.bonds[i][j] {
                Bond::Infinite => return fail("infinite bond"),
                Bond::Order(2) => {}
                Bond::Order(m) => edges.push((i, j, m)),
            }
        }
    }
    if edges.len() != k - 1 {
        return fail("contains a cycle");
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let neighbors = |v: usize| {
        edges
            .iter()
            .filter_map(move |&(a, b, m)| match (a == v, b == v) {
                (true, _) => Some((b, m)),
                (_, true) => Some((a, m)),
                _ => None,
            })
            .collect::<Vec<_>>()
    };
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => {}
        [center] if degree(*center) == 3 => {
            if edges.iter().any(|e| e.2 != 3) {
                return fail("branched graph with a multiple bond");
            }
            let mut arms: Vec<usize> = neighbors(*center)
                .into_iter()
                .map(|(start, _)| {
                    let (mut prev, mut cur, mut len) = (*center, start, 1);
                    loop {
                        let next: Vec<usize> = neighbors(cur)
                            .into_iter()
                            .map(|x| x.0)
                            .filter(|&x| x != prev)
                            .collect();
                        match next.as_slice() {
                            [x] => {
                                prev = cur;
                                cur = *x;
                                len += 1;
                            }
                            _ => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            return match arms.as_slice() {
                [1, 1, c] => Ok(IrreducibleType::D(c + 3)),
                [1, 2, 2] => Ok(IrreducibleType::E6),
                [1, 2, 3] => Ok(IrreducibleType::E7),
                [1, 2, 4] => Ok(IrreducibleType::E8),
                _ => fail("unrecognized branch lengths"),
            };
        }
        _ => return fail("more than one branch point"),
    }
    // a path: read off labels from one end
    let end = comp.iter().copied().find(|&v| degree(v) == 1).unwrap();
    let mut labels = Vec::with_capacity(k - 1);
    let (mut prev, mut cur) = (usize::MAX, end);
    loop {
        let next = neighbors(cur).into_iter().find(|&(x, _)| x != prev);
        match next {
            Some((x, m)) => {
                labels.push(m);
                prev = cur;
                cur = x;
            }
            None => break,
        }
    }
    let special: Vec<(usize, u32)> = labels
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, m)| m != 3)
        .collect();
    let at_end = |i: usize| i == 0 || i == labels.len() - 1;
    match (k, special.as_slice()) {
        (_, []) => Ok(IrreducibleType::A(k)),
        (2, [(_, 4)]) => Ok(IrreducibleType::BC(2)),
        (2, [(_, 6)]) => Ok(IrreducibleType::G2),
        (2, [(_, m)]) => Ok(IrreducibleType::I2(*m)),
        (_, [(i, 4)]) if at_end(*i) => Ok(IrreducibleType::BC(k)),
        (4, [(1, 4)]) => Ok(IrreducibleType::F4),
        (3, [(i, 5)]) if at_end(*i) => Ok(IrreducibleType::H3),
        (4, [(i, 5)]) if at_end(*i) => Ok(IrreducibleType::H4),
        _ => fail("unrecognized bond labels"),
    }
}

/// Finite types of the connected components of the sub-diagram on `nodes`,
/// sorted. `nodes` must be a proper subset of the node set.
pub fn classify_subdiagram(d: &CoxeterDiagram, nodes: Subset) -> Result<Vec<IrreducibleType>> {
    let all = d.all_nodes();
    if !nodes.is_subset_of(all) {
        return Err(Error::Input(format!("{nodes} is not a set of nodes")));
    }
    if nodes == all {
        return Err(Error::Classification(
            "the full extended diagram is of affine type".into(),
        ));
    }
    let mut types = d
        .components(nodes)
        .iter()
        .map(|c| recognize(d, c))
        .collect::<Result<Vec<_>>>()?;
    types.sort();
    Ok(types)
}

/// `|W_J|`, the order of the reflection subgroup generated by the nodes in `J`.
pub fn subgroup_order(d: &CoxeterDiagram, nodes: Subset) -> Result<BigInt> {
    Ok(classify_subdiagram(d, nodes)?
        .into_iter()
        .map(IrreducibleType::order)
        .product())
}

/// `|W|` for the finite Weyl group of type `family` and rank `n`
/// (for `A`, `n` is the Coxeter rank: `|A_n| = (n+1)!`).
pub fn group_order(family: Family, n: usize) -> Result<BigInt> {
    let d = extended_diagram(family, n)?;
    subgroup_order(&d, Subset::range(1, n))
}

/// `sum_{J proper} |W|/|W_J| prod_{j in J} (1 - t_j) prod_{j not in J} t_j`.
pub fn affine_eulerian_formula(family: Family, n: usize) -> Result<FlagPolynomial> {
    let d = extended_diagram(family, n)?;
    let all = d.all_nodes();
    let order = subgroup_order(&d, Subset::range(1, n))?;
    let mut out = FlagPolynomial::zero(n);
    for j in all.subsets().filter(|&j| j != all) {
        let index = &order / subgroup_order(&d, j)?;
        let outside = all.difference(j);
        // prod_{j in J} (1 - t_j) = sum_{I subset J} (-1)^{|I|} t_I
        for i in j.subsets() {
            let c = if i.len() % 2 == 1 {
                -&index
            } else {
                index.clone()
            };
            out.add_term(i.union(outside), c);
        }
    }
    Ok(out)
}
