#include "cdim/ring.hpp"

namespace cdim {

RingContext::RingContext(FieldSpec field, std::vector<std::string> variable_names)
    : field_(field), variable_names_(std::move(variable_names)) {
    if (variable_names_.empty()) throw UsageError("a ring needs at least one variable");
    for (std::size_t i = 0; i < variable_names_.size(); ++i) {
        if (variable_names_[i].empty()) throw UsageError("empty variable name");
        for (std::size_t j = i + 1; j < variable_names_.size(); ++j)
            if (variable_names_[i] == variable_names_[j])
                throw UsageError("duplicate variable name: " + variable_names_[i]);
    }
}

int RingContext::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variable_names_.size(); ++i)
        if (variable_names_[i] == name) return static_cast<int>(i);
    return -1;
}

std::string RingContext::to_string() const {
    std::string out = field_.to_string() + "[";
    for (std::size_t i = 0; i < variable_names_.size(); ++i) {
        if (i) out += ",";
        out += variable_names_[i];
    }
    return out + "]";
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> variable_names) {
    return std::make_shared<const RingContext>(field, std::move(variable_names));
}

} // namespace cdim
