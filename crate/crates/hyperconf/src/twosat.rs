//! Linear-time 2-SAT via the implication graph and strongly connected
//! components.

/// A literal over variables `0..num_vars`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn positive(var: usize) -> Literal {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn negative(var: usize) -> Literal {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn negated(self) -> Literal {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    fn node(self) -> usize {
        2 * self.var + self.positive as usize
    }
}

/// Clauses have one or two literals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    Unit(Literal),
    Binary(Literal, Literal),
}

impl Clause {
    pub fn literals(self) -> (Literal, Option<Literal>) {
        match self {
            Clause::Unit(a) => (a, None),
            Clause::Binary(a, b) => (a, Some(b)),
        }
    }
}

/// Returns a satisfying assignment, or `None` when the formula is
/// unsatisfiable.
pub fn twosat_solve(num_vars: usize, clauses: &[Clause]) -> Option<Vec<bool>> {
    let nodes = 2 * num_vars;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); nodes];
    for &clause in clauses {
        match clause {
            Clause::Unit(a) => {
                adj[a.negated().node()].push(a.node() as u32);
            }
            Clause::Binary(a, b) => {
                adj[a.negated().node()].push(b.node() as u32);
                adj[b.negated().node()].push(a.node() as u32);
            }
        }
    }
    let comp = tarjan_scc(&adj);
    for v in 0..num_vars {
        if comp[2 * v] == comp[2 * v + 1] {
            return None;
        }
    }
    // Tarjan numbers components in reverse topological order: a literal is
    // made true when its node comes later in topological order than its
    // negation, i.e. has the smaller component index.
    Some(
        (0..num_vars)
            .map(|v| comp[2 * v + 1] < comp[2 * v])
            .collect(),
    )
}

fn tarjan_scc(adj: &[Vec<u32>]) -> Vec<u32> {
    const UNSET: u32 = u32::MAX;
    let n = adj.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut call: Vec<(u32, usize)> = Vec::new();
    let mut next_index = 0u32;
    let mut next_comp = 0u32;

    for root in 0..n as u32 {
        if index[root as usize] != UNSET {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut ei)) = call.last_mut() {
            let vu = v as usize;
            if *ei == 0 {
                index[vu] = next_index;
                low[vu] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[vu] = true;
            }
            if let Some(&w) = adj[vu].get(*ei) {
                *ei += 1;
                let wu = w as usize;
                if index[wu] == UNSET {
                    call.push((w, 0));
                } else if on_stack[wu] {
                    low[vu] = low[vu].min(index[wu]);
                }
            } else {
                if low[vu] == index[vu] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        comp[w as usize] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    let pu = p as usize;
                    low[pu] = low[pu].min(low[vu]);
                }
            }
        }
    }
    comp
}
