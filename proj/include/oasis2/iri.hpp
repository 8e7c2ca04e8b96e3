#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace oasis2 {

// Absolute IRI. Equality is byte equality of the underlying string.
struct Iri {
    std::string value;

    Iri() = default;
    explicit Iri(std::string v) : value(std::move(v)) {}
    explicit Iri(const char* v) : value(v) {}

    bool absolute() const {
        if (value.empty()) return false;
        bool has_colon = false;
        for (char c : value) {
            if (c == ':') has_colon = true;
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
        }
        return has_colon;
    }

    // Local part after the last '#' or '/', or the whole string.
    std::string_view local_name() const {
        auto pos = value.find_last_of("#/");
        if (pos == std::string::npos) return value;
        return std::string_view(value).substr(pos + 1);
    }

    std::string_view namespace_part() const {
        auto pos = value.find_last_of("#/");
        if (pos == std::string::npos) return {};
        return std::string_view(value).substr(0, pos + 1);
    }

    auto operator<=>(const Iri&) const = default;
};

inline Iri operator+(const Iri& ns, std::string_view local) {
    return Iri(ns.value + std::string(local));
}

}  // namespace oasis2
