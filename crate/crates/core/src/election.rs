//! Approval-based Chamberlin–Courant elections as MaxCover instances.
//!
//! Voters become elements, candidates become sets; a committee's
//! misrepresentation score is the uncovered count of the matching solution.

use crate::error::{Error, Result};
use crate::instance::Instance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApprovalElection {
    num_candidates: usize,
    /// Per voter, sorted 0-based candidate ids.
    approvals: Vec<Vec<usize>>,
    committee_size: usize,
}

impl ApprovalElection {
    pub fn new(
        num_candidates: usize,
        approvals: Vec<Vec<usize>>,
        committee_size: usize,
    ) -> Result<Self> {
        let mut approvals = approvals;
        for (v, ballot) in approvals.iter_mut().enumerate() {
            ballot.sort_unstable();
            ballot.dedup();
            if let Some(&c) = ballot.last() {
                if c >= num_candidates {
                    return Err(Error::InvalidInstance(format!(
                        "voter {} approves candidate {} but there are {} candidates",
                        v + 1,
                        c + 1,
                        num_candidates
                    )));
                }
            }
        }
        Ok(ApprovalElection {
            num_candidates,
            approvals,
            committee_size,
        })
    }

    pub fn num_candidates(&self) -> usize {
        self.num_candidates
    }

    pub fn num_voters(&self) -> usize {
        self.approvals.len()
    }

    pub fn committee_size(&self) -> usize {
        self.committee_size
    }

    pub fn approvals(&self) -> &[Vec<usize>] {
        &self.approvals
    }

    /// Number of voters approving no member of `committee` (0-based ids).
    pub fn misrepresentation(&self, committee: &[usize]) -> usize {
        self.approvals
            .iter()
            .filter(|ballot| !ballot.iter().any(|c| committee.contains(c)))
            .count()
    }

    /// One set per candidate holding the voters that approve it.
    pub fn to_maxcover(&self) -> Instance {
        let mut sets = vec![Vec::new(); self.num_candidates];
        for (voter, ballot) in self.approvals.iter().enumerate() {
            for &c in ballot {
                sets[c].push(voter);
            }
        }
        Instance::new(self.num_voters(), sets, self.committee_size)
            .expect("voter ids are in range by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposes_approvals() {
        let e = ApprovalElection::new(2, vec![vec![0], vec![0, 1], vec![1]], 1).unwrap();
        let inst = e.to_maxcover();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.sets(), &[vec![0, 1], vec![1, 2]]);
        assert_eq!(inst.k(), 1);
    }

    #[test]
    fn empty_ballot_is_never_covered() {
        let e = ApprovalElection::new(2, vec![vec![], vec![0, 1]], 2).unwrap();
        let inst = e.to_maxcover();
        assert!(inst.sets().iter().all(|s| !s.contains(&0)));
        assert_eq!(e.misrepresentation(&[0, 1]), 1);
    }

    #[test]
    fn misrepresentation_equals_uncovered() {
        let e = ApprovalElection::new(
            4,
            vec![vec![0, 2], vec![1], vec![3], vec![], vec![1, 2, 3]],
            2,
        )
        .unwrap();
        let inst = e.to_maxcover();
        for a in 0..4 {
            for b in a + 1..4 {
                let covered = inst.coverage(&[a, b]).unwrap();
                assert_eq!(inst.n() - covered, e.misrepresentation(&[a, b]));
            }
        }
    }

    #[test]
    fn rejects_unknown_candidate() {
        assert!(ApprovalElection::new(1, vec![vec![1]], 1).is_err());
    }
}
