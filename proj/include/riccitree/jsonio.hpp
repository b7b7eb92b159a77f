#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace riccitree {

// Small ordered JSON writer.  Insertion order of object keys is preserved
// and doubles are printed with "%.12g", so identical data always serializes
// to identical bytes -- the CLI promises byte-stable output.
class Json {
 public:
  static Json object();
  static Json array();
  static Json num(double v);
  static Json integer(long v);
  static Json str(std::string v);
  static Json boolean(bool v);
  static Json null();

  Json& add(const std::string& key, Json v);  // object members, in call order
  Json& push(Json v);                         // array elements

  std::string dump(int indent = 2) const;  // indent 0 = single line

 private:
  enum class Kind { Null, Bool, Int, Num, Str, Arr, Obj };
  Kind kind_ = Kind::Null;
  bool b_ = false;
  long i_ = 0;
  double d_ = 0.0;
  std::string s_;
  std::vector<Json> arr_;
  std::vector<std::pair<std::string, Json>> obj_;

  void write(std::string& out, int indent, int depth) const;
};

std::string json_double(double v);  // the "%.12g" rendering used throughout

}  // namespace riccitree
