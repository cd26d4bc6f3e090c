//! Heatmap output: binary PPM (`P6`) and CSV.
//!
//! The PPM is `n × n`, linear grayscale from white at 0 to black at the
//! largest defined entry; masked pairs are red. The CSV keeps the raw
//! values, with masked pairs as empty fields.

use std::fmt::Write;

use crate::product::ProductHeatmap;

const RED: [u8; 3] = [255, 0, 0];

pub fn emit_heatmap_ppm(h: &ProductHeatmap) -> Vec<u8> {
    let n = h.n();
    let mut out = format!("P6\n{n} {n}\n255\n").into_bytes();
    out.reserve(3 * n * n);
    let max = h.max_defined().unwrap_or(0.0);
    for row in h.rows() {
        for entry in row {
            match entry {
                None => out.extend(RED),
                Some(v) => {
                    let t = if max > 0.0 {
                        (v / max).clamp(0.0, 1.0)
                    } else {
                        0.0
                    };
                    let gray = (255.0 * (1.0 - t)).round() as u8;
                    out.extend([gray; 3]);
                }
            }
        }
    }
    out
}

/// One row per line, values in shortest round-trip form.
pub fn emit_heatmap_csv(h: &ProductHeatmap) -> String {
    let mut out = String::new();
    for row in h.rows() {
        let mut first = true;
        for entry in row {
            if !first {
                out.push(',');
            }
            first = false;
            if let Some(v) = entry {
                write!(out, "{v}").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, Graph, VertexFunction};
    use crate::product::product_heatmap;
    use crate::spectra::{EigenDecomposition, Operator};

    fn heatmap_of(g: &Graph, vectors: Vec<Vec<f64>>) -> ProductHeatmap {
        let dec = EigenDecomposition {
            eigenvalues: vec![0.0; vectors.len()],
            eigenvectors: vectors.into_iter().map(VertexFunction::new).collect(),
            source: Operator::Laplacian,
        };
        product_heatmap(g, &dec).unwrap()
    }

    #[test]
    fn single_white_pixel() {
        let g = Graph::empty(1);
        let h = heatmap_of(&g, vec![vec![1.0]]);
        let ppm = emit_heatmap_ppm(&h);
        assert_eq!(ppm, b"P6\n1 1\n255\n\xff\xff\xff".to_vec());
        assert_eq!(emit_heatmap_csv(&h), "0\n");
    }

    #[test]
    fn equal_positive_entries_are_black() {
        // δ_v on C_4 has quotient 2, and δ_v·δ_v = δ_v
        let g = cycle(4).unwrap();
        let h = heatmap_of(&g, vec![vec![1.0, 0.0, 0.0, 0.0]]);
        let ppm = emit_heatmap_ppm(&h);
        assert_eq!(&ppm[ppm.len() - 3..], &[0, 0, 0]);
    }

    #[test]
    fn masked_pairs_are_red_and_blank() {
        let g = cycle(4).unwrap();
        let h = heatmap_of(&g, vec![vec![1.0, 0.0, 0.0, 0.0], vec![0.0, 0.0, 1.0, 0.0]]);
        let ppm = emit_heatmap_ppm(&h);
        let header = b"P6\n2 2\n255\n".len();
        assert_eq!(ppm.len(), header + 12);
        assert_eq!(&ppm[header + 3..header + 6], &RED);
        assert_eq!(emit_heatmap_csv(&h), "2,\n,2\n");
    }
}
