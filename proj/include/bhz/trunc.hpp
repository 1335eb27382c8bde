#pragma once

#include <limits>

#include "bhz/scalar.hpp"

namespace bhz {

/// Truncation contract for SeriesElem: max t-degree, an inclusive Laurent
/// window of retained hbar exponents, a max weighted state degree (the
/// variable p~_k or x^a_k has weight k), and a Laurent window for Lambda.
struct TruncSpec {
    int t_max = 0;
    int h_min = 0;
    int h_max = 0;
    int state_deg_max = 0;
    int lam_min = 0;
    int lam_max = 0;

    static TruncSpec make(int t_max, int h_min, int h_max, int state_deg_max) {
        TruncSpec ts;
        ts.t_max = t_max;
        ts.h_min = h_min;
        ts.h_max = h_max;
        ts.state_deg_max = state_deg_max;
        ts.lam_min = -(state_deg_max + t_max + 4);
        ts.lam_max = state_deg_max + t_max + 4;
        ts.validate();
        return ts;
    }

    /// Window for probe computations: generous hbar and Lambda ranges.
    static TruncSpec probe(int state_deg_max, int slack = 8) {
        TruncSpec ts;
        ts.t_max = state_deg_max;
        ts.h_min = -(state_deg_max + slack);
        ts.h_max = 2 * state_deg_max + 2 * slack;
        ts.state_deg_max = state_deg_max;
        ts.lam_min = -(state_deg_max + slack);
        ts.lam_max = state_deg_max + slack;
        return ts;
    }

    void validate() const {
        if (h_min > h_max || t_max < 0 || state_deg_max < t_max || lam_min > lam_max)
            throw config_error("TruncSpec: invalid truncation bounds");
    }

    bool operator==(const TruncSpec& o) const = default;
};

}  // namespace bhz
