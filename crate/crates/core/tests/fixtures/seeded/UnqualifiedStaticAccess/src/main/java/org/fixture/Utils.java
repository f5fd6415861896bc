package org.fixture;

class Utils {
  static void doWork() {}

  static Utils getUtils() {
    return new Utils();
  }

  void run() {
    Utils utilInstance = new Utils();
    Utils.doWork();
    utilInstance.doWork();
    getUtils().doWork();
  }
}
