use crate::arith::{exponent_vector, Factorization};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// No hyperedge is monochromatic.
pub fn is_proper_coloring<L>(h: &Hypergraph<L>, colors: &[u8]) -> bool {
    colors.len() == h.vertex_count()
        && h.edges()
            .iter()
            .all(|e| e.iter().any(|&v| colors[v] != colors[e[0]]))
}

/// Smallest number of colours admitting a proper (weak) colouring, by
/// exhaustive backtracking. Zero for a hypergraph without vertices.
pub fn chromatic_number<L>(h: &Hypergraph<L>) -> usize {
    let n = h.vertex_count();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&k| color_with(h, k).is_some())
        .expect("n colours always suffice")
}

fn color_with<L>(h: &Hypergraph<L>, k: usize) -> Option<Vec<u8>> {
    let incidence = h.incidence_lists();
    let mut order: Vec<usize> = (0..h.vertex_count()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(incidence[v].len()));

    let mut colors: Vec<Option<u8>> = vec![None; h.vertex_count()];
    // Remaining uncoloured vertices per edge.
    let mut open: Vec<usize> = h.edges().iter().map(Vec::len).collect();

    fn monochromatic(edge: &[usize], colors: &[Option<u8>]) -> bool {
        let c = colors[edge[0]];
        edge.iter().all(|&v| colors[v] == c)
    }

    #[allow(clippy::too_many_arguments)]
    fn search<L>(
        h: &Hypergraph<L>,
        incidence: &[Vec<usize>],
        order: &[usize],
        depth: usize,
        k: usize,
        used: usize,
        colors: &mut Vec<Option<u8>>,
        open: &mut Vec<usize>,
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        // Colours beyond `used` are interchangeable, so try only one of them.
        let limit = k.min(used + 1);
        for c in 0..limit {
            colors[v] = Some(c as u8);
            for &e in &incidence[v] {
                open[e] -= 1;
            }
            let ok = incidence[v]
                .iter()
                .all(|&e| open[e] > 0 || !monochromatic(&h.edges()[e], colors));
            if ok
                && search(
                    h,
                    incidence,
                    order,
                    depth + 1,
                    k,
                    used.max(c + 1),
                    colors,
                    open,
                )
            {
                return true;
            }
            for &e in &incidence[v] {
                open[e] += 1;
            }
            colors[v] = None;
        }
        false
    }

    if search(h, &incidence, &order, 0, k, 0, &mut colors, &mut open) {
        Some(
            colors
                .into_iter()
                .map(|c| c.expect("all coloured"))
                .collect(),
        )
    } else {
        None
    }
}

/// Colours vertices whose exponent of the smallest prime is full with `0`,
/// the rest with `1`, and checks the result is proper.
pub fn constructive_two_coloring(f: &Factorization, h: &Hypergraph<u64>) -> Result<Vec<u8>> {
    let colors = h
        .vertices()
        .iter()
        .map(|&d| {
            let full = exponent_vector(d, f)?.is_full_at(f, 0);
            Ok(if full { 0 } else { 1 })
        })
        .collect::<Result<Vec<u8>>>()?;
    if let Some(e) = h
        .edges()
        .iter()
        .find(|e| e.iter().all(|&v| colors[v] == colors[e[0]]))
    {
        return Err(Error::ImproperColoring {
            edge: e.iter().map(|&v| h.vertices()[v]).collect(),
        });
    }
    Ok(colors)
}
