package org.fixture;

class Utils {
  static void doWork() {}

  void run(java.util.List<String> list) {
    Utils.doWork();
    list.size();
  }
}
