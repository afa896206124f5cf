use serde::Serialize;

use crate::complex::{Ext, LinkGraph};
use crate::tame::vertex::{OrbitVertex, Type1Vertex};
use crate::tame::{act_on_vertex, TameElement};
use crate::GroundPoly;

use super::{PortionError, TamePortion};

/// One row of the link-orbit table: the element, where it moved the base link
/// node, and the measured link distance inside the portion.
#[derive(Clone, Debug, Serialize)]
pub struct LinkOrbitRow {
    pub element: String,
    pub image_vertex: Option<String>,
    /// Link distance between the base node and its image, when the image lies
    /// in the portion. An upper bound on the true link distance only in the
    /// sense that unseen squares can shorten paths; reported verbatim.
    pub distance: Option<Ext>,
    pub in_portion: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkOrbitReport {
    pub base_vertex: String,
    pub base_node: String,
    pub rows: Vec<LinkOrbitRow>,
    pub note: String,
}

/// Explore how stabilizer elements move edges in the link of the base vertex
/// `[x1]` inside the enumerated portion.
///
/// Every element must fix the base vertex. The measured distances exhibit
/// growth; they do not certify unboundedness.
pub fn partial_link_exploration(
    portion: &TamePortion,
    stab_elems: &[TameElement],
) -> Result<LinkOrbitReport, PortionError> {
    let base = OrbitVertex::T1(Type1Vertex::new(&GroundPoly::var(0))?);
    let v_id = portion
        .find_vertex(&base)?
        .ok_or_else(|| PortionError::MissingVertex("base vertex [x1]".into()))?;
    let link = LinkGraph::new(&portion.complex, v_id);
    let &base_node = link
        .nodes
        .first()
        .ok_or_else(|| PortionError::MissingVertex("base vertex has no link nodes".into()))?;

    let mut rows = Vec::new();
    for h in stab_elems {
        let hv = act_on_vertex(h, &base)?;
        if portion.find_vertex(&hv)? != Some(v_id) {
            return Err(PortionError::NotInStabilizer(format!(
                "{} moves [x1] to {}",
                h.word_string(),
                hv
            )));
        }
        let image = act_on_vertex(h, &portion.vertex_data[base_node])?;
        let image_id = portion.find_vertex(&image)?;
        let (distance, in_portion, image_vertex) = match image_id {
            Some(id) => (
                Some(link.distance(base_node, id)),
                true,
                Some(portion.complex.label(id).to_string()),
            ),
            None => (None, false, Some(image.to_string())),
        };
        rows.push(LinkOrbitRow {
            element: h.word_string(),
            image_vertex,
            distance,
            in_portion,
        });
    }
    Ok(LinkOrbitReport {
        base_vertex: portion.complex.label(v_id).to_string(),
        base_node: portion.complex.label(base_node).to_string(),
        rows,
        note: "distances measured inside the enumerated portion only; growth is exploratory"
            .into(),
    })
}
