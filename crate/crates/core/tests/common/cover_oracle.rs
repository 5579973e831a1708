//! Builds a simple branched cover of the 2-sphere triangle by triangle and
//! counts cells. Independent of the movie bookkeeping in the library.
//!
//! Base triangulation: a bipyramid whose rim vertices `p_0..p_{r-1}` include
//! the branch points, apexes `c` (inner) and `o` (outer). Crossing the edge
//! `o–p_j` between outer triangles `j-1` and `j` applies the monodromy `g_j`;
//! every other edge is glued by the identity. The local monodromy at `p_j` is
//! then `g_j`, and at `o` it is the ordered product, which must be trivial.

pub struct CoverCells {
    pub chi: i64,
    /// Sheets (1-based) of each component, sorted by least sheet.
    pub components: Vec<Vec<usize>>,
    pub chi_per_component: Vec<i64>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// `transpositions` are 0-based sheet pairs, one per branch point.
pub fn branched_cover(sheets: usize, transpositions: &[(usize, usize)]) -> CoverCells {
    let k = transpositions.len();
    let r = k.max(3);
    let mono: Vec<Vec<usize>> = (0..r)
        .map(|j| {
            let mut g: Vec<usize> = (0..sheets).collect();
            if let Some(&(x, y)) = transpositions.get(j) {
                g.swap(x, y);
            }
            g
        })
        .collect();

    // Triangles: inner t = 0..r is (c, p_t, p_{t+1}); outer r+t is (o, p_t, p_{t+1}).
    // Corners are indexed 0 = apex, 1 = p_t, 2 = p_{t+1}.
    let tri_count = 2 * r;
    let corner = |tri: usize, sheet: usize, c: usize| (tri * sheets + sheet) * 3 + c;
    let mut corners = Dsu::new(tri_count * sheets * 3);
    let mut faces = Dsu::new(tri_count * sheets);

    // glue tri_a's edge (corners ca0, ca1) to tri_b's edge (cb0, cb1) with sheet map g
    let mut glue = |ta: usize, ca: [usize; 2], tb: usize, cb: [usize; 2], g: &[usize]| {
        for (s, &t) in g.iter().enumerate() {
            corners.union(corner(ta, s, ca[0]), corner(tb, t, cb[0]));
            corners.union(corner(ta, s, ca[1]), corner(tb, t, cb[1]));
            faces.union(ta * sheets + s, tb * sheets + t);
        }
    };
    let id: Vec<usize> = (0..sheets).collect();
    for t in 0..r {
        let next = (t + 1) % r;
        // inner t and inner next share c–p_{t+1}
        glue(t, [0, 2], next, [0, 1], &id);
        // outer t and outer next share o–p_{t+1}; crossing applies g_{t+1}
        glue(r + t, [0, 2], r + next, [0, 1], &mono[next]);
        // inner t and outer t share the rim edge p_t–p_{t+1}
        glue(t, [1, 2], r + t, [1, 2], &id);
    }

    let mut vertex_classes: Vec<usize> = (0..tri_count * sheets * 3).map(|x| corners.find(x)).collect();
    vertex_classes.sort_unstable();
    vertex_classes.dedup();
    let v = vertex_classes.len() as i64;
    let e = (3 * r * sheets) as i64;
    let f = (tri_count * sheets) as i64;

    // Components are labelled by inner triangle 0, where sheet s is sheet s.
    let mut comp_of_root = std::collections::BTreeMap::new();
    for s in 0..sheets {
        let root = faces.find(s);
        comp_of_root.entry(root).or_insert_with(Vec::new).push(s + 1);
    }
    let mut components: Vec<Vec<usize>> = comp_of_root.values().cloned().collect();
    components.sort();

    let chi_per_component = components
        .iter()
        .map(|comp| {
            let root = faces.find(comp[0] - 1);
            let in_comp = |tri: usize, s: usize, faces: &mut Dsu| faces.find(tri * sheets + s) == root;
            let mut fc = 0i64;
            let mut verts = Vec::new();
            for tri in 0..tri_count {
                for s in 0..sheets {
                    if in_comp(tri, s, &mut faces) {
                        fc += 1;
                        for c in 0..3 {
                            verts.push(corners.find(corner(tri, s, c)));
                        }
                    }
                }
            }
            verts.sort_unstable();
            verts.dedup();
            // each edge is shared by exactly two triangles
            verts.len() as i64 - 3 * fc / 2 + fc
        })
        .collect();

    CoverCells {
        chi: v - e + f,
        components,
        chi_per_component,
    }
}
