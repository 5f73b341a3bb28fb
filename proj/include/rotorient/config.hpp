#ifndef ROTORIENT_CONFIG_HPP
#define ROTORIENT_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>

namespace rotorient {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat `[section] key = value` text configuration. '#' starts a comment;
/// blank lines are ignored. Keys are addressed as "section.key".
class Config {
public:
    Config() = default;

    static Config parse_file(const std::string& path);
    /// Throws ConfigError with a line number on malformed input.
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;

    /// Throwing accessors for required keys.
    std::string require_string(const std::string& key) const;
    double require_double(const std::string& key) const;

    void set(const std::string& key, const std::string& value);
    void set_double(const std::string& key, double value);
    void set_int(const std::string& key, int value);

    /// Serializes back to `[section] key = value` text with sections sorted;
    /// doubles are written with round-trip precision, so a reparsed dump
    /// resolves to the identical configuration.
    std::string dump() const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

/// Round-trip formatting for doubles (shortest representation that parses
/// back to the same value). Used by Config and all CSV writers so repeated
/// runs emit bit-identical text.
std::string format_double(double value);

}  // namespace rotorient

#endif
