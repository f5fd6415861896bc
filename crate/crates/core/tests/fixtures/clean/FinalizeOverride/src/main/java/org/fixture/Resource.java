package org.fixture;

class Resource {
  void finalize(int code) {}

  void close() {}
}
