#include "uvreg/output.hpp"

#include "uvreg/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace uvreg::cli {

Record& Record::add(std::string key, double v)
{
    fields_.emplace_back(std::move(key), v);
    return *this;
}

Record& Record::add(std::string key, std::string v)
{
    fields_.emplace_back(std::move(key), std::move(v));
    return *this;
}

Record& Record::add(std::string key, bool v)
{
    fields_.emplace_back(std::move(key), v);
    return *this;
}

void Record::write_text(std::ostream& out) const
{
    std::size_t width = 0;
    for (const auto& [k, v] : fields_)
        width = std::max(width, k.size());
    for (const auto& [k, v] : fields_) {
        out << k << std::string(width - k.size() + 2, ' ');
        if (auto d = std::get_if<double>(&v))
            out << sweep::format_number(*d);
        else if (auto s = std::get_if<std::string>(&v))
            out << *s;
        else
            out << (std::get<bool>(v) ? "true" : "false");
        out << '\n';
    }
}

std::string Record::json() const
{
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : fields_) {
        if (!first)
            out += ',';
        first = false;
        out += json_quote(k) + ':';
        if (auto d = std::get_if<double>(&v))
            out += std::isfinite(*d) ? sweep::format_number(*d) : "null";
        else if (auto s = std::get_if<std::string>(&v))
            out += json_quote(*s);
        else
            out += std::get<bool>(v) ? "true" : "false";
    }
    return out + "}";
}

std::string scaled_text(const Scaled& v)
{
    if (v.is_zero())
        return "0*exp(0)";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g*exp(%.17g)", v.mantissa, v.log_scale);
    return buf;
}

std::string json_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
        } else {
            out += c;
        }
    }
    return out + "\"";
}

} // namespace uvreg::cli
