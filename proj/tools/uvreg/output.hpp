#pragma once

#include "uvreg/scaled.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace uvreg::cli {

// A flat record printed either as aligned "key  value" text or as one JSON
// object. Doubles are written with 17 significant digits.
class Record {
public:
    using Value = std::variant<double, std::string, bool>;

    Record& add(std::string key, double v);
    Record& add(std::string key, std::string v);
    Record& add(std::string key, const char* v) { return add(std::move(key), std::string(v)); }
    Record& add(std::string key, bool v);

    void write_text(std::ostream& out) const;
    std::string json() const;

private:
    std::vector<std::pair<std::string, Value>> fields_;
};

// "m*exp(s)" with a 17-digit mantissa
std::string scaled_text(const Scaled& v);

std::string json_quote(const std::string& s);

} // namespace uvreg::cli
