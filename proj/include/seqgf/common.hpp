#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace seqgf {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Sampling ladder n_j = 2^j, j = 1..max_exp.  Geometric spacing suits the
/// log-scale asymptotics used throughout; every check is O(#points).
struct IndexLadder {
    std::vector<long> points;

    static IndexLadder geometric(int max_exp = 20, int min_exp = 1) {
        IndexLadder l;
        for (int j = min_exp; j <= max_exp; ++j) l.points.push_back(1L << j);
        return l;
    }

    /// Drop indices below a domain floor (e.g. 2 for 1/log n, 3 when a
    /// log log n term is present).
    IndexLadder from(long lo) const {
        IndexLadder l;
        for (long n : points)
            if (n >= lo) l.points.push_back(n);
        return l;
    }

    long back() const { return points.back(); }
    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
};

inline IndexLadder default_ladder() { return IndexLadder::geometric(); }

struct Witness {
    double index = 0;   // sequence index n (or scan parameter, see note)
    double value = 0;
    std::string note;
};

/// Tri-state outcome for predicates that finite data cannot always decide.
class Verdict {
public:
    enum class State { Holds, Fails, Inconclusive };

    static Verdict holds(std::string evidence = {}) { return Verdict(State::Holds, {}, std::move(evidence)); }
    static Verdict fails(Witness w, std::string evidence = {}) {
        return Verdict(State::Fails, std::move(w), std::move(evidence));
    }
    static Verdict inconclusive(std::string evidence) {
        return Verdict(State::Inconclusive, {}, std::move(evidence));
    }

    State state() const { return state_; }
    bool is_holds() const { return state_ == State::Holds; }
    bool is_fails() const { return state_ == State::Fails; }
    bool is_inconclusive() const { return state_ == State::Inconclusive; }
    const std::optional<Witness>& witness() const { return witness_; }
    const std::string& evidence() const { return evidence_; }

    std::string str() const {
        switch (state_) {
            case State::Holds: return "holds";
            case State::Fails: return "fails";
            default: return "inconclusive";
        }
    }

private:
    Verdict(State s, std::optional<Witness> w, std::string e)
        : state_(s), witness_(std::move(w)), evidence_(std::move(e)) {}

    State state_;
    std::optional<Witness> witness_;
    std::string evidence_;
};

} // namespace seqgf
