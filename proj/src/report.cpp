#include "gnlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace gnlab {

std::string format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  if (v == 0.0) return "0"; // fold negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void JsonWriter::comma() {
  if (first_.empty()) return;
  if (!first_.back()) os_ << ",";
  first_.back() = false;
}

void JsonWriter::write_key(const std::string& key) {
  comma();
  os_ << "\"" << key << "\":";
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  os_ << "{";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::begin_object(const std::string& key) {
  write_key(key);
  os_ << "{";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  os_ << "}";
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key) {
  write_key(key);
  os_ << "[";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  os_ << "]";
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, double v) {
  write_key(key);
  os_ << format_double(v);
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, int v) {
  write_key(key);
  os_ << v;
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, bool v) {
  write_key(key);
  os_ << (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const std::string& v) {
  write_key(key);
  os_ << "\"" << v << "\"";
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const char* v) {
  return field(key, std::string(v));
}

JsonWriter& JsonWriter::element(double v) {
  comma();
  os_ << format_double(v);
  return *this;
}

JsonWriter& JsonWriter::element(const std::string& v) {
  comma();
  os_ << "\"" << v << "\"";
  return *this;
}

JsonWriter& JsonWriter::begin_element_object() {
  comma();
  os_ << "{";
  first_.push_back(true);
  return *this;
}

} // namespace gnlab
