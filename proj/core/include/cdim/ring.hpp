#ifndef CDIM_RING_HPP
#define CDIM_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "cdim/field.hpp"

namespace cdim {

/// Ambient polynomial ring k[X_1,...,X_n]: a coefficient field plus an
/// ordered list of distinct variable names.
class RingContext {
public:
    RingContext(FieldSpec field, std::vector<std::string> variable_names);

    const FieldSpec& field() const { return field_; }
    int n_vars() const { return static_cast<int>(variable_names_.size()); }
    const std::vector<std::string>& variable_names() const { return variable_names_; }
    const std::string& variable_name(int i) const { return variable_names_.at(i); }

    /// Index of a variable name, or -1.
    int variable_index(const std::string& name) const;

    bool operator==(const RingContext& other) const {
        return field_ == other.field_ && variable_names_ == other.variable_names_;
    }

    /// "GF(7)[X1,X2]".
    std::string to_string() const;

private:
    FieldSpec field_;
    std::vector<std::string> variable_names_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> variable_names);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace cdim

#endif
