#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gnlab {

// Fixed 12-significant-digit formatting so identical inputs produce
// byte-identical reports.
std::string format_double(double v);

// Minimal streaming JSON writer: insertion order is preserved and floats go
// through format_double, which keeps CLI output deterministic.
class JsonWriter {
public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(const std::string& key);
  JsonWriter& begin_object(const std::string& key);
  JsonWriter& end_array();

  JsonWriter& field(const std::string& key, double v);
  JsonWriter& field(const std::string& key, int v);
  JsonWriter& field(const std::string& key, bool v);
  JsonWriter& field(const std::string& key, const std::string& v);
  JsonWriter& field(const std::string& key, const char* v);

  // array elements
  JsonWriter& element(double v);
  JsonWriter& element(const std::string& v);
  JsonWriter& begin_element_object();

private:
  void comma();
  void write_key(const std::string& key);
  std::ostream& os_;
  std::vector<bool> first_; // per nesting level
};

} // namespace gnlab
