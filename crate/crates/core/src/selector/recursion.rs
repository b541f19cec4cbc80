//! Recursive selection of a rich set within the size bound.
//!
//! Each level purifies, then either keeps the support of the purified point
//! (`CaseI`) or hands a smaller ratio to the next level:
//!
//! * `CaseIIPrime` (`q >= 2p`): the coordinates below one carry at least
//!   `(q - p)/q` of the total, so a `p/(q - p)`-rich subset of them suffices.
//! * `CaseIIDoublePrime` (`q < 2p`): take every coordinate below one, plus a
//!   `(2p - q)/p`-rich subset of the coordinates equal to one.
//!
//! `p + q` strictly decreases from level to level, so the recursion ends.

use serde::Serialize;

use super::purify::purify_view;
use super::{is_rich_within, upper_bound_f, Instance, TargetRatio};
use crate::error::{internal, Result};
use crate::numeric::RatVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseTag {
    BaseZero,
    BaseOne,
    ShortcutAll,
    CaseI,
    CaseIIPrime,
    CaseIIDoublePrime,
}

/// One level of the recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub case_tag: CaseTag,
    /// Ratio handled at this level.
    pub p: u64,
    pub q: u64,
    /// Number of vectors at this level.
    pub n: usize,
    /// Size bound at this level.
    pub bound_f: usize,
    /// Ratio handed to the next level; absent for leaves.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sub_p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sub_q: Option<u64>,
    /// Number of vectors handed to the next level; absent for leaves.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sub_n: Option<usize>,
    /// `|{i : x_i < 1}|` after purification, for the two recursive cases.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_size: Option<usize>,
}

impl TraceStep {
    fn leaf(case_tag: CaseTag, ratio: TargetRatio, n: usize, bound_f: usize) -> Self {
        TraceStep {
            case_tag,
            p: ratio.p(),
            q: ratio.q(),
            n,
            bound_f,
            sub_p: None,
            sub_q: None,
            sub_n: None,
            j_size: None,
        }
    }
}

/// A rich index set together with how it was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    /// Chosen indices, ascending and 0-based.
    pub indices: Vec<usize>,
    pub sum: RatVec,
    pub bound_f: usize,
    pub trace: Vec<TraceStep>,
}

impl Selection {
    pub fn size(&self) -> usize {
        self.indices.len()
    }
}

/// Finds a rich set of size at most [`upper_bound_f`].
///
/// Returns [`crate::Error::Internal`] if the result fails its own exact
/// verification, which would indicate a bug.
pub fn select_rich_subset(inst: &Instance, ratio: TargetRatio) -> Result<Selection> {
    let view: Vec<usize> = (0..inst.n()).collect();
    let mut trace = Vec::new();
    let mut indices = select_view(inst, &view, ratio, &mut trace)?;
    indices.sort_unstable();

    let bound_f = upper_bound_f(inst.n(), inst.d(), ratio);
    if indices.len() > bound_f {
        return internal(format!(
            "selected {} indices, bound is {bound_f}",
            indices.len()
        ));
    }
    if !is_rich_within(inst, &view, ratio, &indices) {
        return internal("selected set is not rich");
    }
    let sum = inst.subset_sum(&indices);
    Ok(Selection {
        indices,
        sum,
        bound_f,
        trace,
    })
}

/// Selection among the vectors `view` (original indices); returns original
/// indices. `view` may be empty at inner levels.
fn select_view(
    inst: &Instance,
    view: &[usize],
    ratio: TargetRatio,
    trace: &mut Vec<TraceStep>,
) -> Result<Vec<usize>> {
    let (p, q) = (ratio.p(), ratio.q());
    let n = view.len();
    let s = inst.d() - 1;
    let f = upper_bound_f(n, inst.d(), ratio);

    if p == 0 {
        trace.push(TraceStep::leaf(CaseTag::BaseZero, ratio, n, f));
        return Ok(Vec::new());
    }
    if p == q {
        trace.push(TraceStep::leaf(CaseTag::BaseOne, ratio, n, f));
        return Ok(view.to_vec());
    }
    if f >= n {
        trace.push(TraceStep::leaf(CaseTag::ShortcutAll, ratio, n, f));
        return Ok(view.to_vec());
    }

    let point = purify_view(inst, view, ratio)?;
    let zeros = point.zero_set.len();
    let ones = point.one_set.len();

    if zeros >= n - f {
        trace.push(TraceStep::leaf(CaseTag::CaseI, ratio, n, f));
        let support = (0..n)
            .filter(|i| !point.zero_set.contains(i))
            .map(|i| view[i])
            .collect();
        return Ok(support);
    }
    if ones < f - s {
        return internal(format!(
            "purified point has {zeros} zeros and {ones} ones; need {} zeros or {} ones",
            n - f,
            f - s
        ));
    }

    // J = {i : x_i < 1}, as original indices.
    let below_one: Vec<usize> = (0..n)
        .filter(|i| point.one_set.binary_search(i).is_err())
        .map(|i| view[i])
        .collect();
    let j_size = below_one.len();
    if j_size > n - f + s {
        return internal(format!("|J| = {j_size} exceeds N - f + s = {}", n - f + s));
    }

    if q >= 2 * p {
        let sub = TargetRatio::new(p, q - p)?;
        trace.push(TraceStep {
            sub_p: Some(sub.p()),
            sub_q: Some(sub.q()),
            sub_n: Some(j_size),
            j_size: Some(j_size),
            ..TraceStep::leaf(CaseTag::CaseIIPrime, ratio, n, f)
        });
        select_view(inst, &below_one, sub, trace)
    } else {
        let sub = TargetRatio::new(2 * p - q, p)?;
        let at_one: Vec<usize> = point.one_set.iter().map(|&i| view[i]).collect();
        trace.push(TraceStep {
            sub_p: Some(sub.p()),
            sub_q: Some(sub.q()),
            sub_n: Some(at_one.len()),
            j_size: Some(j_size),
            ..TraceStep::leaf(CaseTag::CaseIIDoublePrime, ratio, n, f)
        });
        let mut chosen = select_view(inst, &at_one, sub, trace)?;
        chosen.extend(below_one);
        Ok(chosen)
    }
}
