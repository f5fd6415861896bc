package org.fixture;

class Reader {
  /**
   * Does it.
   * @param b unrelated
   * @return
   * @return again
   * @param zz
   */
  void check(int a) throws java.io.IOException {}

  /**
   * Closes the reader.
   * @return nothing
   */
  void close() {}
}
