//! Text formats: graph JSON, coordinate JSON, and the CSV reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PlanarEmbedding;
use crate::method::{GalleryEntry, GALLERY_METHODS};
use crate::morph::Kaleidoscope;
use crate::solver::Drawing;

/// On-disk graph: `{"n": .., "rotation": [[..], ..], "outer_face": [..]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
    pub outer_face: Vec<usize>,
}

impl From<&PlanarEmbedding> for GraphFile {
    fn from(emb: &PlanarEmbedding) -> Self {
        Self {
            n: emb.n(),
            rotation: emb.rotation().to_vec(),
            outer_face: emb.outer_face().to_vec(),
        }
    }
}

impl GraphFile {
    /// Validates every embedding invariant.
    pub fn into_embedding(self) -> Result<PlanarEmbedding> {
        if self.n != self.rotation.len() {
            return Err(Error::Format(format!(
                "n = {} but the rotation lists {} vertices",
                self.n,
                self.rotation.len()
            )));
        }
        PlanarEmbedding::new(self.rotation, self.outer_face)
    }
}

pub fn graph_to_json(emb: &PlanarEmbedding) -> String {
    serde_json::to_string(&GraphFile::from(emb)).expect("graph serialises")
}

pub fn graph_from_json(text: &str) -> Result<PlanarEmbedding> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    file.into_embedding()
}

/// `{"0": [x, y], "1": [x, y], ...}` in vertex order.
pub fn coordinates_json(d: &Drawing) -> String {
    let map: BTreeMap<usize, [f64; 2]> = d.positions.iter().enumerate().map(|(v, p)| (v, [p.x, p.y])).collect();
    serde_json::to_string_pretty(&map).expect("coordinates serialise")
}

pub fn coordinates_from_json(text: &str) -> Result<Vec<[f64; 2]>> {
    let map: BTreeMap<usize, [f64; 2]> = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if map.keys().copied().ne(0..map.len()) {
        return Err(Error::Format("coordinate keys must be 0..n".into()));
    }
    Ok(map.into_values().collect())
}

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::Format(format!("csv: {e}"))
}

fn finish(writer: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = writer.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

/// Header `angle_degrees,edge_length_ratio`, one row per angle, six decimals.
pub fn kaleidoscope_csv(k: &Kaleidoscope) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["angle_degrees", "edge_length_ratio"]).map_err(csv_error)?;
    for row in &k.rows {
        w.write_record([format!("{:.6}", row.angle_degrees), format!("{:.6}", row.ratio)])
            .map_err(csv_error)?;
    }
    finish(w)
}

/// One row per graph with the edge-length ratio of each gallery method, the
/// chosen BFS `r`, and any failures as `method:Kind` pairs.
pub fn gallery_csv(entries: &[GalleryEntry]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["graph".to_string(), "n".into(), "m".into()];
    header.extend(GALLERY_METHODS.iter().map(|m| m.name().to_string()));
    header.extend(["bfs_r".to_string(), "errors".into()]);
    w.write_record(&header).map_err(csv_error)?;
    for entry in entries {
        let mut record = vec![entry.name.clone(), entry.n.to_string(), entry.m.to_string()];
        let mut errors = Vec::new();
        let mut bfs_r = String::new();
        for (method, result) in GALLERY_METHODS.iter().zip(&entry.results) {
            match result {
                Ok(cell) => {
                    if let Some(r) = cell.result.r {
                        bfs_r = format!("{r}");
                    }
                    record.push(format!("{:.6}", cell.metrics.edge_length_ratio));
                }
                Err(e) => {
                    record.push(String::new());
                    errors.push(format!("{method}:{}", e.kind()));
                }
            }
        }
        record.push(bfs_r);
        record.push(errors.join(";"));
        w.write_record(&record).map_err(csv_error)?;
    }
    finish(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate_planar;
    use crate::graph::tests::k4;
    use crate::method::{gallery_entry, GalleryEntry};
    use crate::morph::KaleidoscopeRow;
    use crate::solver::{regular_polygon, tutte};

    #[test]
    fn graph_round_trip() {
        let emb = generate_planar(12, 28, 3).unwrap();
        let back = graph_from_json(&graph_to_json(&emb)).unwrap();
        assert_eq!(back.rotation(), emb.rotation());
        assert_eq!(back.outer_face(), emb.outer_face());
    }

    #[test]
    fn graph_json_shape_and_validation() {
        let text = graph_to_json(&k4());
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["n"], 4);
        assert_eq!(v["outer_face"].as_array().unwrap().len(), 3);
        assert!(matches!(graph_from_json("{\"n\": 4}"), Err(Error::Format(_))));
        let wrong_n = text.replace("\"n\":4", "\"n\":5");
        assert!(matches!(graph_from_json(&wrong_n), Err(Error::Format(_))));
        let asymmetric = r#"{"n":4,"rotation":[[1,2,3],[0,2,3],[0,1,3],[0,1]],"outer_face":[0,1,2]}"#;
        assert!(matches!(graph_from_json(asymmetric), Err(Error::MalformedRotation(_))));
    }

    #[test]
    fn coordinates_round_trip() {
        let emb = k4();
        let d = tutte(&emb, &regular_polygon(emb.outer_face(), 1.0).unwrap()).unwrap();
        let back = coordinates_from_json(&coordinates_json(&d)).unwrap();
        assert_eq!(back.len(), 4);
        for (p, q) in d.positions.iter().zip(&back) {
            assert_eq!([p.x, p.y], *q);
        }
    }

    #[test]
    fn kaleidoscope_csv_format() {
        let k = Kaleidoscope {
            rows: vec![
                KaleidoscopeRow { angle_degrees: 0.0, ratio: 12.5 },
                KaleidoscopeRow { angle_degrees: 90.0, ratio: 1.0 / 3.0 },
            ],
            argmin: 1,
            argmax: 0,
        };
        assert_eq!(
            kaleidoscope_csv(&k).unwrap(),
            "angle_degrees,edge_length_ratio\n0.000000,12.500000\n90.000000,0.333333\n"
        );
    }

    #[test]
    fn gallery_csv_marks_failures() {
        let emb = generate_planar(16, 36, 2).unwrap();
        let mut entry = gallery_entry("g16", &emb);
        entry.results[2] = Err(Error::SingularSystem);
        let failed = GalleryEntry { name: "bad".into(), ..entry.clone() };
        let text = gallery_csv(&[entry, failed]).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "graph,n,m,tutte,xspread,yspread,xymorph,bfs,bfs_r,errors");
        assert_eq!(lines.len(), 3);
        let cols: Vec<&str> = lines[1].split(',').collect();
        assert_eq!(cols.len(), 10);
        assert_eq!(cols[5], "");
        assert_eq!(cols[9], "yspread:SingularSystem");
    }
}
